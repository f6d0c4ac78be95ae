import logging
from dataclasses import dataclass, field
from typing import List
from ..Diagram import Diagram
from ..diagram_operations import assert_valid, bend
from .reduction import to_rgslo
from .simplify import simplify_pair, unpaired_red
from .to_gslo import to_gslo


logger = logging.getLogger("toybits")


@dataclass(frozen=True)
class EqualityResult:
    """Outcome of an equality decision.

    ``witness`` is a trace of graph-state moves: the to_gslo step, local
    complementations, fixpoints and pivots applied to the first diagram, followed by
    the undone moves of the second. It is only filled when the diagrams are equal.
    """
    equal: bool
    reason: str
    witness: List[str] = field(default_factory=list)

    def __bool__(self):
        return self.equal


def decide_equal(first: Diagram, second: Diagram) -> EqualityResult:
    """Decide whether two diagrams denote the same relation.

    Both diagrams are bent into states, normalised to rGS-LO form and simplified as a
    pair. An unpaired red operator then proves them different; otherwise they are
    equal exactly when the two simplified forms are identical.
    """
    assert_valid(first)
    assert_valid(second)
    if (first.n_inputs, first.n_outputs) != (second.n_inputs, second.n_outputs):
        return EqualityResult(False, "boundary mismatch: "
                              f"({first.n_inputs}, {first.n_outputs}) vs ({second.n_inputs}, {second.n_outputs})")
    trace1, trace2 = [], []
    g1 = to_gslo(bend(first), trace1)
    g2 = to_gslo(bend(second), trace2)
    if g1 is None and g2 is None:
        return EqualityResult(True, "both diagrams are zero", trace1 + _undo(trace2))
    if g1 is None or g2 is None:
        which = "first" if g1 is None else "second"
        return EqualityResult(False, f"only the {which} diagram is zero")

    g1 = to_rgslo(g1, trace1)
    g2 = to_rgslo(g2, trace2)
    g1, g2 = simplify_pair(g1, g2, trace1, trace2)
    unpaired = unpaired_red(g1, g2)
    if unpaired:
        return EqualityResult(False, f"unpaired red node at toy bit {unpaired[0]}")
    if g1 != g2:
        return EqualityResult(False, "simplified forms differ")
    logger.info("Diagrams are equal after %s and %s moves", len(trace1), len(trace2))
    return EqualityResult(True, "identical simplified forms", trace1 + _undo(trace2))


def _undo(trace: List[str]) -> List[str]:
    return [f"undo {move}" for move in reversed(trace)]
