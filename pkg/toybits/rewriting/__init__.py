"""
Rewriting
=========
The rewrite rules of the toy bit calculus. Every rule exists for both colours, in
both directions and upside down. A rule finds matches in a diagram and applies one
of them; the boundary and the denoted relation stay the same.

.. testcode::

    from toybits.generators import green_spider
    from toybits.diagram_operations import seq
    from toybits.rewriting import get_rule_by_name

    rule = get_rule_by_name("spider")
    diagram = seq(green_spider(0, 1, "01"), green_spider(1, 1, "10"))
    print(len(rule.find_matches(diagram)))

Should output

.. testoutput::

    1

"""
from .BaseRule import BaseRule, Match
from .BialgebraRule import BialgebraRule
from .ColourChangeRule import ColourChangeRule
from .CopyRule import CopyRule
from .ElevenCommutationRule import ElevenCommutationRule
from .ElevenCopyRule import ElevenCopyRule
from .EulerRule import EulerRule
from .IdentityRule import IdentityRule
from .LoopRule import LoopRule
from .random_rewrites import random_rewrite_sweep, random_rewrites
from .RewriteProcessor import RewriteProcessor, RewriteReport
from .rule_set import RULE_CLASSES, get_rule_by_name, rule_set
from .scalars import drop_scalars
from .soundness import check_soundness, soundness_report
from .SpiderRule import SpiderRule


__all__ = [
    "BaseRule",
    "BialgebraRule",
    "check_soundness",
    "ColourChangeRule",
    "CopyRule",
    "drop_scalars",
    "ElevenCommutationRule",
    "ElevenCopyRule",
    "EulerRule",
    "get_rule_by_name",
    "IdentityRule",
    "LoopRule",
    "Match",
    "random_rewrite_sweep",
    "random_rewrites",
    "RewriteProcessor",
    "RewriteReport",
    "RULE_CLASSES",
    "rule_set",
    "soundness_report",
    "SpiderRule",
]
