"""Moves that change a GS-LO diagram without changing the state it denotes."""
import logging
from typing import List, Optional
from ..binary.graph_matrices import local_complement_adj, pivot_adj
from ..LocalOp import LocalOp
from ..Phase import Phase
from .GSLO import GSLO


logger = logging.getLogger("toybits")

G01 = LocalOp.green(Phase(0, 1))
G11 = LocalOp.green(Phase(1, 1))
R01 = LocalOp.red(Phase(0, 1))
R11 = LocalOp.red(Phase(1, 1))
HADAMARD_OP = LocalOp.hadamard()


def _check_vertex(g: GSLO, v: int):
    assert 0 <= v < g.n, f"Vertex {v} out of range for {g.n} vertices."


def _record(trace: Optional[List[str]], move: str):
    logger.debug("Applying %s", move)
    if trace is not None:
        trace.append(move)


def fixpoint(g: GSLO, v: int, trace: Optional[List[str]] = None) -> GSLO:
    """Compose red 11 at ``v`` and green 11 at its neighbours; the graph stays."""
    _check_vertex(g, v)
    ops = list(g.ops)
    ops[v] = ops[v] * R11
    for w in g.neighbours(v):
        ops[w] = ops[w] * G11
    _record(trace, f"fixpoint {v}")
    return g.replace(ops=ops)


def local_comp(g: GSLO, v: int, trace: Optional[List[str]] = None) -> GSLO:
    """Complement the graph about ``v``; red 01 goes to ``v`` and green 01 to its neighbours."""
    _check_vertex(g, v)
    ops = list(g.ops)
    ops[v] = ops[v] * R01
    for w in g.neighbours(v):
        ops[w] = ops[w] * G01
    _record(trace, f"local_comp {v}")
    return g.replace(theta=local_complement_adj(g.theta, v), ops=ops)


def pivot(g: GSLO, v: int, w: int, trace: Optional[List[str]] = None) -> GSLO:
    """Local complementation along the edge {v, w}; both endpoints get an H."""
    _check_vertex(g, v)
    _check_vertex(g, w)
    if not g.adjacent(v, w):
        raise ValueError(f"Cannot pivot along {v}-{w}: the vertices are not adjacent.")
    ops = list(g.ops)
    ops[v] = ops[v] * HADAMARD_OP
    ops[w] = ops[w] * HADAMARD_OP
    _record(trace, f"pivot {v} {w}")
    return g.replace(theta=pivot_adj(g.theta, v, w), ops=ops)
