from typing import List, Optional, Sequence
import numpy as np
from ..binary.graph_matrices import is_adjacency_matrix
from ..constants import GREEN, HADAMARD, RED
from ..Diagram import Diagram, Node
from ..LocalOp import LocalOp
from ..Phase import ZERO_PHASE


class GSLO:
    """Graph state with one reversible local operator on every toy bit.

    Vertex ``k`` is output ``k``. The operator of a vertex acts on the graph-state
    output, with the rightmost factor of its canonical word closest to the graph.

    .. testcode::

        import numpy as np
        from toybits.normalform import GSLO

        g = GSLO(np.array([[0, 1], [1, 0]]))
        print(g.neighbours(0), g.is_reduced())

    Should output

    .. testoutput::

        [1] True

    Attributes
    ----------
    theta:
        Symmetric 0/1 adjacency matrix with zero diagonal.
    ops:
        Tuple with one LocalOp per vertex.
    """
    def __init__(self, theta, ops: Optional[Sequence[LocalOp]] = None):
        theta = np.asarray(theta, dtype=np.uint8)
        assert is_adjacency_matrix(theta), "Expected a symmetric 0/1 matrix with zero diagonal."
        if ops is None:
            ops = [LocalOp.identity()] * theta.shape[0]
        assert len(ops) == theta.shape[0], "Expected one local operator per vertex."
        self._theta = theta.copy()
        self._ops = tuple(ops)

    @property
    def n(self) -> int:
        return self._theta.shape[0]

    @property
    def theta(self) -> np.ndarray:
        return self._theta.copy()

    @property
    def ops(self):
        return self._ops

    def clone(self):
        return GSLO(self._theta, self._ops)

    def replace(self, theta=None, ops=None) -> "GSLO":
        """Copy with a new adjacency matrix and/or new operators."""
        return GSLO(self._theta if theta is None else theta, self._ops if ops is None else ops)

    def neighbours(self, v: int) -> List[int]:
        return [int(w) for w in np.flatnonzero(self._theta[v])]

    def adjacent(self, v: int, w: int) -> bool:
        return bool(self._theta[v, w])

    def red_bearing(self) -> List[int]:
        """Vertices whose operator is not a pure green phase."""
        return [v for v, op in enumerate(self._ops) if not op.is_green]

    def is_reduced(self) -> bool:
        """All operators in the reduced set and no two adjacent red-bearing vertices."""
        if not all(op.is_reduced for op in self._ops):
            return False
        red = self.red_bearing()
        return not any(self.adjacent(v, w) for v in red for w in red if v < w)

    def to_diagram(self) -> Diagram:
        """One green node per vertex, an H node per edge and the operator chain on each output."""
        nodes = {}
        edges = []
        for v in range(self.n):
            nodes[f"v{v}"] = Node(GREEN)
        for v in range(self.n):
            for w in self.neighbours(v):
                if v < w:
                    nodes[f"h{v}_{w}"] = Node(HADAMARD)
                    edges.extend([(f"v{v}", f"h{v}_{w}"), (f"h{v}_{w}", f"v{w}")])
        for v, op in enumerate(self._ops):
            outer, red, inner = op.canonical_word
            previous = f"v{v}"
            for name, colour, phase in (("a", GREEN, inner), ("b", RED, red), ("c", GREEN, outer)):
                if phase == ZERO_PHASE:
                    continue
                node_id = f"o{v}{name}"
                nodes[node_id] = Node(colour, phase)
                edges.append((previous, node_id))
                previous = node_id
            edges.append((previous, f"out{v}"))
        return Diagram(nodes, edges, 0, self.n)

    def __eq__(self, other):
        if not isinstance(other, GSLO):
            return False
        return np.array_equal(self._theta, other.theta) and self._ops == other.ops

    __hash__ = None

    def __repr__(self):
        return f"GSLO({self.n} vertices, {int(self._theta.sum()) // 2} edges)"

    def __str__(self):
        lines = []
        for v, op in enumerate(self._ops):
            neighbours = " ".join(str(w) for w in self.neighbours(v)) or "-"
            lines.append(f"{v}: {neighbours} | {op}")
        return "\n".join(lines)


def graph_state(theta) -> Diagram:
    """Diagram of the bare graph state of an adjacency matrix."""
    return GSLO(theta).to_diagram()
