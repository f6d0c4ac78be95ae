import logging
from typing import List, Optional, Sequence, Tuple
import numpy as np
from tqdm import tqdm
from ..Diagram import Diagram
from ..interpretation import interpret
from ..random_diagrams import random_diagram
from .BaseRule import BaseRule
from .rule_set import rule_set


logger = logging.getLogger("toybits")


def random_rewrites(diagram: Diagram, rng: np.random.Generator, n_steps: int = 10, max_nodes: int = 20,
                    rules: Optional[Sequence[BaseRule]] = None) -> Tuple[Diagram, List[str]]:
    """Apply ``n_steps`` randomly chosen rewrites, keeping at most ``max_nodes`` nodes.

    Each step tries the rules in a random order and applies a random match of the
    first rule that has one whose result is small enough. Returns the rewritten
    diagram and the labels of the applied rules.
    """
    rules = list(rule_set() if rules is None else rules)
    trace = []
    for _ in range(n_steps):
        for index in rng.permutation(len(rules)):
            rule = rules[index]
            matches = rule.find_matches(diagram)
            if not matches:
                continue
            candidate = rule.apply(diagram, matches[rng.integers(len(matches))])
            if len(candidate.nodes) <= max_nodes:
                diagram = candidate
                trace.append(rule.label)
                break
    return diagram, trace


def random_rewrite_sweep(n_diagrams: int, seed: int = 0, n_steps: int = 5, max_outputs: int = 3,
                         max_nodes: int = 8, progress_bar: bool = False) -> int:
    """Rewrite random diagrams randomly and count those whose relation changed."""
    rng = np.random.default_rng(seed)
    rules = rule_set()
    failures = 0
    for _ in tqdm(range(n_diagrams), disable=not progress_bar, desc="Random rewriting"):
        diagram = random_diagram(rng, max_outputs, max_nodes, n_inputs=int(rng.integers(0, 2)))
        rewritten, trace = random_rewrites(diagram, rng, n_steps, max_nodes + 4, rules)
        if interpret(rewritten) != interpret(diagram):
            logger.warning("Random rewriting changed the relation of a diagram, steps %s.", trace)
            failures += 1
    return failures
