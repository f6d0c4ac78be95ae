from . import binary, exporting, importing, normalform, rewriting
from .__version__ import __version__
from .Diagram import Diagram, Node
from .diagram_operations import bend, dagger, iso_equal, par, seq, unbend, validate
from .interpretation import interpret
from .LocalOp import LocalOp
from .logging_functions import _init_logger, set_toybits_logger_level
from .normalform import GSLO, decide_equal, to_gslo, to_rgslo
from .Phase import Phase
from .Relation import Relation
from .relation_operations import compose, converse, product
from .rewriting import RewriteProcessor, rule_set


_init_logger()


__author__ = "Toybits developers"
__all__ = [
    "__version__",
    "bend",
    "binary",
    "compose",
    "converse",
    "dagger",
    "decide_equal",
    "Diagram",
    "exporting",
    "GSLO",
    "importing",
    "interpret",
    "iso_equal",
    "LocalOp",
    "Node",
    "normalform",
    "par",
    "Phase",
    "product",
    "Relation",
    "RewriteProcessor",
    "rewriting",
    "rule_set",
    "seq",
    "set_toybits_logger_level",
    "to_gslo",
    "to_rgslo",
    "unbend",
    "validate",
]
