from itertools import product
from typing import List
from ..constants import COLOURS, GREEN
from .BaseRule import BaseRule
from .BialgebraRule import BialgebraRule
from .ColourChangeRule import ColourChangeRule
from .CopyRule import CopyRule
from .ElevenCommutationRule import ElevenCommutationRule
from .ElevenCopyRule import ElevenCopyRule
from .EulerRule import EulerRule
from .IdentityRule import IdentityRule
from .LoopRule import LoopRule
from .SpiderRule import SpiderRule


RULE_CLASSES = [SpiderRule, LoopRule, IdentityRule, BialgebraRule, CopyRule,
                ElevenCopyRule, ElevenCommutationRule, ColourChangeRule, EulerRule]
RULE_NAMES = {rule_class.name: rule_class for rule_class in RULE_CLASSES}


def rule_set() -> List[BaseRule]:
    """Every rule in both colours, both directions and both orientations."""
    return [rule_class(colour, reverse, upside_down)
            for rule_class in RULE_CLASSES
            for colour, reverse, upside_down in product(COLOURS, (False, True), (False, True))]


def get_rule_by_name(name: str, colour: str = GREEN, reverse: bool = False,
                     upside_down: bool = False) -> BaseRule:
    """Look up a rule by its short name, such as ``"spider"`` or ``"euler"``."""
    if name not in RULE_NAMES:
        raise ValueError(f"Unknown rule: {name}. Should be one of {sorted(RULE_NAMES)}.")
    return RULE_NAMES[name](colour, reverse, upside_down)
