"""
Normal forms
############

Graph states with local operators (GS-LO), their reduced form (rGS-LO), the
graph moves between them, pair simplification and the equality decision.
"""
from ..LocalOp import LocalOp, all_local_ops, reduced_ops
from .decide_equal import EqualityResult, decide_equal
from .graph_moves import fixpoint, local_comp, pivot
from .GSLO import GSLO, graph_state
from .reduction import move_red, prop1_move, prop2_move, to_rgslo
from .simplify import find_violation, is_simplified, simplify_pair, unpaired_red
from .to_gslo import to_gslo


__all__ = [
    "all_local_ops",
    "decide_equal",
    "EqualityResult",
    "find_violation",
    "fixpoint",
    "graph_state",
    "GSLO",
    "is_simplified",
    "local_comp",
    "LocalOp",
    "move_red",
    "pivot",
    "prop1_move",
    "prop2_move",
    "reduced_ops",
    "simplify_pair",
    "to_gslo",
    "to_rgslo",
    "unpaired_red",
]
