import logging
from collections import OrderedDict, defaultdict
from typing import Dict, Iterable, List, Optional, Tuple, Union
import pandas as pd
from tqdm import tqdm
from ..Diagram import Diagram
from ..yaml_file_functions import ordered_dump
from .BaseRule import BaseRule, Match
from .rule_set import get_rule_by_name


logger = logging.getLogger("toybits")
RewriteStepType = Union[str, BaseRule, Tuple[str, Dict[str, object]]]


class RewriteProcessor:
    """
    Rewrite diagrams with a fixed list of rules.

    Each step applies the first match of the first listed rule that matches. Rewriting
    stops when no listed rule matches anymore, or after ``max_steps`` steps.

    .. testcode::

        from toybits.generators import green_spider
        from toybits.diagram_operations import seq
        from toybits.rewriting import RewriteProcessor

        processor = RewriteProcessor(["spider", "identity"])
        diagram = seq(green_spider(1, 1, "01"), green_spider(1, 1, "01"))
        result, report = processor.process(diagram)
        print(len(result.nodes), report.n_steps)

    Should output

    .. testoutput::

        0 2

    Parameters
    ----------
    rewrite_steps:
        Rules given as a rule name, a rule name followed by a dictionary with the settings
        ``colour``, ``reverse`` and ``upside_down``, or a rule object.
    max_steps:
        Upper bound on the number of rewrite steps per diagram.
    """

    def __init__(self, rewrite_steps: Iterable[RewriteStepType] = (), max_steps: int = 1000):
        assert max_steps >= 0, "Expected a non-negative number of steps."
        self.rules: List[BaseRule] = []
        self.max_steps = max_steps
        for step in rewrite_steps:
            self.parse_and_add_step(step)

    def parse_and_add_step(self, step_description: RewriteStepType):
        """Add a rule, given in one of the formats accepted by the constructor."""
        settings = {}
        if isinstance(step_description, (tuple, list)):
            if len(step_description) == 1:
                step_description = step_description[0]
            elif len(step_description) == 2:
                step_description, settings = step_description
            else:
                raise ValueError("A rewrite step should contain only two values, the rule name "
                                 "and a dictionary with settings")
        if isinstance(step_description, BaseRule):
            rule = step_description
        elif isinstance(step_description, str):
            if not isinstance(settings, dict):
                raise ValueError(f"Expected a dictionary for the rule settings, got {settings}")
            rule = get_rule_by_name(step_description, **settings)
        else:
            raise TypeError("Expected a rule name or a rule object.")
        self._store_rule(rule)

    def _store_rule(self, new_rule: BaseRule):
        for i, rule in enumerate(self.rules):
            if rule.label == new_rule.label:
                logger.warning("The rule %s was already in the rewrite steps, "
                               "it keeps its first position", new_rule.label)
                self.rules[i] = new_rule
                return
        self.rules.append(new_rule)

    def process(self, diagram: Diagram, progress_bar: bool = False) -> Tuple[Diagram, "RewriteReport"]:
        """Rewrite until no rule matches; return the result and a report of the applied steps."""
        if not self.rules:
            logger.warning("No rewrite steps have been specified, so the diagram was not rewritten")
        report = RewriteReport(self.rules)
        report.n_nodes_before = len(diagram.nodes)
        with tqdm(total=self.max_steps, disable=not progress_bar, desc="Rewriting diagram") as progress:
            while True:
                applied = self.rewrite_once(diagram)
                if applied is None:
                    break
                if report.n_steps == self.max_steps:
                    logger.warning("Rewriting stopped after reaching the maximum of %s steps.", self.max_steps)
                    break
                diagram, match = applied
                report.add_to_report(match)
                progress.update(1)
        report.n_nodes_after = len(diagram.nodes)
        return diagram, report

    def rewrite_once(self, diagram: Diagram) -> Optional[Tuple[Diagram, Match]]:
        for rule in self.rules:
            matches = rule.find_matches(diagram)
            if matches:
                return rule.apply(diagram, matches[0]), matches[0]
        return None

    @property
    def rewrite_steps(self) -> list:
        steps = []
        for rule in self.rules:
            settings = {"colour": rule.colour, "reverse": rule.reverse, "upside_down": rule.upside_down}
            steps.append([rule.name, settings])
        return steps

    def __str__(self):
        workflow = OrderedDict()
        workflow["rewrite_steps"] = self.rewrite_steps
        workflow["max_steps"] = self.max_steps
        return ordered_dump(workflow)


class RewriteReport:
    """Counts how often each rule was applied and keeps the sequence of steps."""
    def __init__(self, rules: Optional[List[BaseRule]] = None):
        self.rule_labels = [rule.label for rule in rules] if rules else []
        self.counter_applications = defaultdict(int)
        self.trace: List[Tuple[str, Tuple[str, ...]]] = []
        self.n_nodes_before = 0
        self.n_nodes_after = 0

    @property
    def n_steps(self) -> int:
        return len(self.trace)

    def add_to_report(self, match: Match):
        self.counter_applications[match.rule] += 1
        self.trace.append((match.rule, match.nodes))

    def to_dataframe(self) -> pd.DataFrame:
        """Pandas DataFrame with the number of applications per rule."""
        counts = {label: self.counter_applications.get(label, 0) for label in self.rule_labels}
        counts.update(self.counter_applications)
        report = pd.DataFrame(list(counts.items()), columns=["rule", "applications"])
        return report.set_index("rule").astype(int)

    def __str__(self):
        pd.set_option('display.width', 1000)
        return ("----- Diagram Rewriting Report -----\n"
                f"Number of rewrite steps: {self.n_steps}\n"
                f"Number of nodes: {self.n_nodes_before} -> {self.n_nodes_after}\n"
                "Applications per rule:\n"
                f"{str(self.to_dataframe())}")

    def __repr__(self):
        return f"RewriteReport({self.n_steps}, {dict(self.counter_applications)})"
