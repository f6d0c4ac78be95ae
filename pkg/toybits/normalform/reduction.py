"""Reduction of GS-LO diagrams to rGS-LO form and the moves between rGS-LO diagrams."""
import logging
from itertools import chain, combinations
from typing import Callable, List, Optional, Sequence
from ..LocalOp import LocalOp
from ..Phase import Phase
from .graph_moves import fixpoint, local_comp, pivot
from .GSLO import GSLO


logger = logging.getLogger("toybits")

VERTEX_WORDS = ((), ("fixpoint",), ("local_comp",), ("local_comp", "fixpoint"))
SAME_BIT_PHASES = (LocalOp.green(Phase(0, 0)), LocalOp.green(Phase(1, 1)))
MIXED_BIT_PHASES = (LocalOp.green(Phase(0, 1)), LocalOp.green(Phase(1, 0)))


def _apply_word(g: GSLO, v: int, word: Sequence[str], trace: Optional[List[str]]) -> GSLO:
    for move in word:
        g = local_comp(g, v, trace) if move == "local_comp" else fixpoint(g, v, trace)
    return g


def _adjacent_red_pair(g: GSLO):
    red = g.red_bearing()
    return next(((v, w) for v, w in combinations(red, 2) if g.adjacent(v, w)), None)


def _settle_with_fixpoints(g: GSLO, vertices: Sequence[int], predicate: Callable[[GSLO], bool],
                           trace: Optional[List[str]]) -> GSLO:
    subsets = chain.from_iterable(combinations(vertices, size) for size in range(len(vertices) + 1))
    for subset in subsets:
        candidate = g
        moves = []
        for v in subset:
            candidate = fixpoint(candidate, v, moves)
        if predicate(candidate):
            if trace is not None:
                trace.extend(moves)
            return candidate
    raise RuntimeError(f"No fixpoints at {list(vertices)} settle the operators.")


def to_rgslo(g: GSLO, trace: Optional[List[str]] = None) -> GSLO:
    """Bring every operator into the reduced set and separate adjacent red-bearing vertices.

    First every vertex is corrected with moves at that vertex only; a vertex that
    turns green stays green, so this takes at most 2n corrections. Then every
    pair of adjacent red-bearing vertices is pivoted, which leaves both green.
    """
    for _ in range(2 * g.n + 1):
        pending = [v for v, op in enumerate(g.ops) if not op.is_reduced]
        if not pending:
            break
        v = pending[0]
        word = next(word for word in VERTEX_WORDS if _apply_word(g, v, word, None).ops[v].is_reduced)
        g = _apply_word(g, v, word, trace)
    else:
        raise RuntimeError("Vertex corrections did not finish within 2n steps.")

    for _ in range(g.n // 2 + 1):
        pair = _adjacent_red_pair(g)
        if pair is None:
            break
        u, v = pair
        g = pivot(g, u, v, trace)
        g = _settle_with_fixpoints(
            g, (u, v), lambda c: all(op.is_reduced for op in c.ops) and c.ops[u].is_green and c.ops[v].is_green,
            trace)
    else:
        raise RuntimeError("Pivots did not remove all adjacent red-bearing pairs.")
    assert g.is_reduced(), "Reduction did not reach rGS-LO form."
    return g


def _check_move_pattern(g: GSLO, p: int, q: int, allowed_q: Sequence[LocalOp], name: str):
    if not g.is_reduced():
        raise ValueError(f"{name} expects a diagram in rGS-LO form.")
    if not g.adjacent(p, q):
        raise ValueError(f"{name} expects adjacent vertices, got {p} and {q}.")
    if g.ops[p].is_green:
        raise ValueError(f"{name} expects a red-bearing operator on vertex {p}.")
    if g.ops[q] not in allowed_q:
        raise ValueError(f"{name} does not apply to the operator {g.ops[q]} on vertex {q}.")


def _moved_red(p: int, q: int) -> Callable[[GSLO], bool]:
    return lambda c: c.is_reduced() and c.ops[p].is_green and not c.ops[q].is_green


def prop1_move(g: GSLO, p: int, q: int, trace: Optional[List[str]] = None) -> GSLO:
    """Move the red operator from ``p`` to its neighbour ``q`` when ``q`` has phase 00 or 11.

    Local complementation about q and then about p, followed by at most two fixpoints.
    """
    _check_move_pattern(g, p, q, SAME_BIT_PHASES, "prop1_move")
    g = local_comp(g, q, trace)
    g = local_comp(g, p, trace)
    return _settle_with_fixpoints(g, (p, q), _moved_red(p, q), trace)


def prop2_move(g: GSLO, p: int, q: int, trace: Optional[List[str]] = None) -> GSLO:
    """Move the red operator from ``p`` to its neighbour ``q`` when ``q`` has phase 01 or 10.

    A pivot along {p, q}, followed by at most two fixpoints.
    """
    _check_move_pattern(g, p, q, MIXED_BIT_PHASES, "prop2_move")
    g = pivot(g, p, q, trace)
    return _settle_with_fixpoints(g, (p, q), _moved_red(p, q), trace)


def move_red(g: GSLO, p: int, q: int, trace: Optional[List[str]] = None) -> GSLO:
    """Apply whichever of the two moves matches the operator on ``q``."""
    if g.ops[q] in SAME_BIT_PHASES:
        return prop1_move(g, p, q, trace)
    return prop2_move(g, p, q, trace)
