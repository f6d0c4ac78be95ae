"""Turn a state diagram into a graph state with local operators.

Every wire carries the two bits (z, x) of its ontic state, and every node is a set
of affine equations over GF(2) on the bits of its legs. Solving the system and
keeping the bits of the outputs gives the state as an affine subspace; its linear
part is read off in graph form after swapping z and x on a few toy bits.
"""
import logging
from typing import List, Optional
import numpy as np
from ..binary import column_space_basis, gf2_inverse, row_reduce, solve_affine
from ..constants import GREEN, HADAMARD
from ..Diagram import Diagram, Node
from ..diagram_operations import assert_valid
from ..LocalOp import LocalOp
from ..Phase import Phase
from .graph_moves import HADAMARD_OP
from .GSLO import GSLO


logger = logging.getLogger("toybits")


class _ConstraintSystem:
    """Affine equations over the bits of the wires.

    Wire ``e`` owns the variables ``2e`` (z) and ``2e + 1`` (x); every spider adds
    one variable for the value shared by its legs.
    """
    def __init__(self, n_wires: int):
        self.n_variables = 2 * n_wires
        self.rows: List[np.ndarray] = []
        self.rhs: List[int] = []

    def new_variable(self) -> int:
        self.n_variables += 1
        return self.n_variables - 1

    def add(self, variables: List[int], value: int = 0):
        """Sum of ``variables`` equals ``value``; repeated variables cancel."""
        self.rows.append(variables)
        self.rhs.append(value)

    def add_node(self, node: Node, legs: List[int]):
        if node.kind == HADAMARD:
            first, second = legs
            self.add([2 * second, 2 * first + 1])
            self.add([2 * second + 1, 2 * first])
            return
        # a green leg fixes z and sums x; a red leg does the opposite
        fixed, summed = (0, 1) if node.kind == GREEN else (1, 0)
        common = self.new_variable()
        for leg in legs:
            self.add([2 * leg + fixed, common])
        phase = node.phase
        flip = [common] if phase.parity(0) != phase.parity(1) else []
        self.add([2 * leg + summed for leg in legs] + flip, phase.parity(0))

    def solve(self):
        matrix = np.zeros((len(self.rows), self.n_variables), dtype=np.uint8)
        for row, variables in enumerate(self.rows):
            for variable in variables:
                matrix[row, variable] ^= 1
        return solve_affine(matrix, np.array(self.rhs, dtype=np.uint8))


def _graph_form_of_state(shift: np.ndarray, basis: np.ndarray) -> GSLO:
    """GSLO for the affine subspace ``shift + span(basis)`` of (z_0..z_{n-1}, x_0..x_{n-1})."""
    n = basis.shape[1]
    if n == 0:
        return GSLO(np.zeros((0, 0), dtype=np.uint8))
    # toy bits whose x is pinned by a basis vector without z part get z and x swapped
    _, pivots = row_reduce(basis.T)
    swapped = [int(p) - n for p in pivots if p >= n]
    order = np.arange(2 * n)
    for k in swapped:
        order[k], order[k + n] = k + n, k
    basis, shift = basis[order].astype(np.int64), shift[order].astype(np.int64)

    m = (basis[n:] @ gf2_inverse(basis[:n]).astype(np.int64)) % 2
    assert np.array_equal(m, m.T), "State is not a maximal-knowledge state."
    offset = (m @ shift[:n] + shift[n:]) % 2
    theta = m.copy()
    np.fill_diagonal(theta, 0)
    ops = []
    for v in range(n):
        c, d = int(offset[v]), int(m[v, v])
        op = LocalOp.green(Phase(c, c ^ d))
        ops.append(HADAMARD_OP * op if v in swapped else op)
    return GSLO(theta.astype(np.uint8), ops)


def to_gslo(diagram: Diagram, trace: Optional[List[str]] = None) -> Optional[GSLO]:
    """Graph state with local operators denoting the same state as ``diagram``.

    Returns None when the diagram denotes the empty relation. Self-loops, parallel
    edges and wires between two outputs are all allowed.

    .. testcode::

        from toybits.generators import bell_state
        from toybits.normalform import to_gslo

        print(to_gslo(bell_state()).theta)

    Should output

    .. testoutput::

        [[0 1]
         [1 0]]

    """
    assert_valid(diagram)
    assert diagram.n_inputs == 0, "Expected a state diagram; bend the inputs first."
    edges = diagram.edges
    system = _ConstraintSystem(len(edges))
    legs = {node_id: [] for node_id in diagram.nodes}
    wire_of = {}
    for index, (a, b) in enumerate(edges):
        for endpoint in (a, b):
            if endpoint in legs:
                legs[endpoint].append(index)
            else:
                wire_of[endpoint] = index
    for node_id, node in sorted(diagram.nodes.items()):
        system.add_node(node, legs[node_id])

    solution = system.solve()
    if solution is None:
        logger.debug("Diagram with %s nodes denotes the empty relation", len(diagram.nodes))
        return None
    particular, kernel = solution
    wires = [wire_of[endpoint] for endpoint in diagram.outputs]
    coordinates = [2 * e for e in wires] + [2 * e + 1 for e in wires]
    basis = column_space_basis(kernel[coordinates])
    assert basis.shape[1] == len(wires), "State is not a maximal-knowledge state."
    result = _graph_form_of_state(particular[coordinates], basis)
    if trace is not None:
        trace.append(f"to_gslo: {result.n} toy bits, {int(result.theta.sum()) // 2} edges")
    return result
