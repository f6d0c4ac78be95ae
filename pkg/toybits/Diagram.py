import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple
import networkx as nx
from .constants import GREEN, HADAMARD, NODE_KINDS, RED
from .Phase import ZERO_PHASE, Phase
from .typing import EdgeType


BOUNDARY_PATTERN = re.compile(r"^(in|out)(\d+)$")


@dataclass(frozen=True)
class Node:
    """A diagram node: a green (Z) or red (X) spider with a phase, or an H node."""
    kind: str
    phase: Optional[Phase] = None

    def __post_init__(self):
        assert self.kind in NODE_KINDS, f"Unknown node kind {self.kind!r}."
        if self.kind == HADAMARD:
            assert self.phase is None, "H nodes do not carry a phase."
        elif self.phase is None:
            object.__setattr__(self, "phase", ZERO_PHASE)

    @property
    def is_spider(self) -> bool:
        return self.kind in (GREEN, RED)

    @property
    def label(self) -> str:
        if self.kind == HADAMARD:
            return HADAMARD
        return f"{self.kind}{self.phase}"

    def with_phase(self, phase: Phase) -> "Node":
        return Node(self.kind, phase)

    def with_colour(self, colour: str) -> "Node":
        return Node(colour, self.phase)


def is_boundary(endpoint: str) -> bool:
    return BOUNDARY_PATTERN.match(endpoint) is not None


def boundary_slot(endpoint: str) -> Tuple[str, int]:
    """Split a boundary endpoint such as ``out2`` into ("out", 2)."""
    match = BOUNDARY_PATTERN.match(endpoint)
    assert match is not None, f"{endpoint!r} is not a boundary endpoint."
    return match.group(1), int(match.group(2))


def _sorted_edge(a: str, b: str) -> EdgeType:
    return (a, b) if a <= b else (b, a)


class Diagram:
    """Open undirected multigraph of spiders and H nodes with ordered boundaries.

    Boundary endpoints are the slots ``in0 .. in{n-1}`` and ``out0 .. out{m-1}``;
    each of them should be the end of exactly one edge. Edges are kept as a
    multiset, so parallel edges and self-loops are represented as they are.
    A diagram is never mutated after construction.

    .. testcode::

        from toybits import Diagram, Node, Phase

        d = Diagram({"a": Node("Z", Phase(0, 1))}, [("a", "out0")], n_outputs=1)
        print(d.degree("a"), d.outputs)

    Should output

    .. testoutput::

        1 ['out0']

    """
    def __init__(self, nodes: Optional[Dict[str, Node]] = None,
                 edges: Iterable[EdgeType] = (),
                 n_inputs: int = 0, n_outputs: int = 0):
        nodes = dict(nodes or {})
        assert all(isinstance(node, Node) for node in nodes.values()), "Expected Node values."
        assert not any(is_boundary(node_id) for node_id in nodes), \
            "Node identifiers must not look like boundary endpoints."
        assert n_inputs >= 0 and n_outputs >= 0, "Expected non-negative boundary counts."
        self._nodes = nodes
        self._edges = tuple(sorted(_sorted_edge(str(a), str(b)) for a, b in edges))
        self._n_inputs = n_inputs
        self._n_outputs = n_outputs

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return False
        return self._nodes == other._nodes and self._edges == other._edges \
            and self._n_inputs == other.n_inputs and self._n_outputs == other.n_outputs

    def __hash__(self):
        return hash((tuple(sorted(self._nodes.items())), self._edges, self._n_inputs, self._n_outputs))

    def __repr__(self):
        return f"Diagram({len(self._nodes)} nodes, {len(self._edges)} edges, " \
               f"{self._n_inputs} inputs, {self._n_outputs} outputs)"

    def clone(self):
        """Return a copy of the diagram."""
        return Diagram(self._nodes, self._edges, self._n_inputs, self._n_outputs)

    @property
    def nodes(self) -> Dict[str, Node]:
        return self._nodes.copy()

    @property
    def edges(self) -> List[EdgeType]:
        return list(self._edges)

    @property
    def n_inputs(self) -> int:
        return self._n_inputs

    @property
    def n_outputs(self) -> int:
        return self._n_outputs

    @property
    def inputs(self) -> List[str]:
        return [f"in{k}" for k in range(self._n_inputs)]

    @property
    def outputs(self) -> List[str]:
        return [f"out{k}" for k in range(self._n_outputs)]

    @property
    def boundary(self) -> List[str]:
        return self.inputs + self.outputs

    @property
    def is_state(self) -> bool:
        return self._n_inputs == 0

    def node(self, node_id: str) -> Node:
        return self._nodes[node_id]

    def edge_multiplicities(self) -> Counter:
        return Counter(self._edges)

    def incident(self, endpoint: str) -> List[Tuple[int, str]]:
        """(edge index, other endpoint) for every edge end at ``endpoint``.

        A self-loop is listed twice, once for each of its ends.
        """
        ends = []
        for index, (a, b) in enumerate(self._edges):
            if a == endpoint:
                ends.append((index, b))
            if b == endpoint:
                ends.append((index, a))
        return ends

    def degree(self, endpoint: str) -> int:
        return len(self.incident(endpoint))

    def neighbours(self, endpoint: str) -> List[str]:
        """Other endpoints of the edges at ``endpoint``, with multiplicity."""
        return [other for _, other in self.incident(endpoint)]

    def self_loops(self, node_id: str) -> int:
        return sum(1 for a, b in self._edges if a == b == node_id)

    def to_networkx(self) -> nx.MultiGraph:
        """Multigraph with boundary slots as nodes; node attribute ``label``."""
        graph = nx.MultiGraph()
        for node_id, node in self._nodes.items():
            graph.add_node(node_id, label=node.label)
        for endpoint in self.boundary:
            graph.add_node(endpoint, label=endpoint)
        for a, b in self._edges:
            graph.add_edge(a, b)
        return graph
