import logging
from typing import Iterable
import pandas as pd
from tqdm import tqdm
from ..interpretation import interpret
from .BaseRule import BaseRule


logger = logging.getLogger("toybits")


def check_soundness(rule: BaseRule, max_legs: int = 3) -> bool:
    """Check a rule on all its left-hand side instances with up to ``max_legs`` legs.

    Every match in every instance is applied and both sides are interpreted. A rule
    without a single applicable instance does not pass.

    Parameters
    ----------
    rule:
        The rule, in the colour and direction to be checked.
    max_legs:
        Bound on the number of open legs per spider of the instances.
    """
    assert max_legs >= 0, "Expected a non-negative leg bound."
    n_checked = 0
    for instance in rule.instances(max_legs):
        before = interpret(instance)
        for match in rule.find_matches(instance):
            after = interpret(rule.apply(instance, match))
            n_checked += 1
            if after != before:
                logger.warning("Rule %s is not sound on match %s.", rule.label, match.nodes)
                return False
    if n_checked == 0:
        logger.warning("Rule %s did not match any of its instances.", rule.label)
        return False
    return True


def soundness_report(rules: Iterable[BaseRule], max_legs: int = 3,
                     progress_bar: bool = False) -> pd.DataFrame:
    """Table with one PASS/FAIL row per rule, indexed by rule label."""
    rules = list(rules)
    rows = []
    for rule in tqdm(rules, disable=not progress_bar, desc="Checking rules"):
        rows.append({"rule": rule.label, "result": "PASS" if check_soundness(rule, max_legs) else "FAIL"})
    return pd.DataFrame(rows, columns=["rule", "result"]).set_index("rule")
