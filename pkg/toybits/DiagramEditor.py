from typing import List, Tuple
from .Diagram import Diagram, Node, is_boundary


class DiagramEditor:
    """Mutable working copy of a diagram, used while a rewrite is being assembled.

    Changes never touch the diagram the editor was created from; call
    :meth:`to_diagram` to obtain the result.
    """
    def __init__(self, diagram: Diagram):
        self.nodes = diagram.nodes
        self.edges = diagram.edges
        self.n_inputs = diagram.n_inputs
        self.n_outputs = diagram.n_outputs
        self._next_id = 0

    def fresh_id(self) -> str:
        while f"n{self._next_id}" in self.nodes:
            self._next_id += 1
        return f"n{self._next_id}"

    def add_node(self, node: Node) -> str:
        node_id = self.fresh_id()
        self.nodes[node_id] = node
        return node_id

    def set_node(self, node_id: str, node: Node):
        assert node_id in self.nodes, f"Unknown node {node_id}."
        self.nodes[node_id] = node

    def add_edge(self, a: str, b: str):
        self.edges.append((a, b))

    def remove_edge(self, a: str, b: str):
        for index, edge in enumerate(self.edges):
            if edge in ((a, b), (b, a)):
                del self.edges[index]
                return
        raise ValueError(f"No edge between {a} and {b}.")

    def incident(self, endpoint: str) -> List[Tuple[int, str]]:
        ends = []
        for index, (a, b) in enumerate(self.edges):
            if a == endpoint:
                ends.append((index, b))
            if b == endpoint:
                ends.append((index, a))
        return ends

    def detach(self, node_id: str) -> List[str]:
        """Remove a node with all its edges; return the other endpoints of its non-loop edges."""
        others = [other for _, other in self.incident(node_id) if other != node_id]
        self.edges = [edge for edge in self.edges if node_id not in edge]
        del self.nodes[node_id]
        return others

    def redirect(self, old: str, new: str):
        """Move every edge end at ``old`` to ``new``."""
        self.edges = [(new if a == old else a, new if b == old else b) for a, b in self.edges]

    def splice_out(self, node_id: str):
        """Remove a node of degree 2 and join its two neighbours with a plain edge."""
        ends = self.incident(node_id)
        assert len(ends) == 2, f"Node {node_id} does not have degree 2."
        if ends[0][0] == ends[1][0]:
            # a node whose only edge is a loop leaves a closed wire behind
            self.detach(node_id)
            loop = self.add_node(Node("Z"))
            self.add_edge(loop, loop)
            return
        self.detach(node_id)
        self.add_edge(ends[0][1], ends[1][1])

    def insert_on_edge(self, index: int, node: Node) -> str:
        """Place a new node of degree 2 on the edge with the given index."""
        a, b = self.edges.pop(index)
        node_id = self.add_node(node)
        self.edges.extend([(a, node_id), (node_id, b)])
        return node_id

    def to_diagram(self) -> Diagram:
        return Diagram(self.nodes, self.edges, self.n_inputs, self.n_outputs)
