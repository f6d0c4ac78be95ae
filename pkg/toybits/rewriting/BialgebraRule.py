from itertools import combinations
from typing import List, Optional
from ..Diagram import Diagram, Node
from .BaseRule import BaseRule, schema, spider_ids


class BialgebraRule(BaseRule):
    """Two phase-00 spiders of one colour fully connected to two of the other colour.

    The four nodes are replaced by a single edge between a spider of the other colour,
    which takes the open legs of the first pair, and a spider of this colour, which
    takes the open legs of the second pair. The rule holds exactly, without a scalar.
    """
    name = "bialgebra"

    @staticmethod
    def _plain(diagram: Diagram, node_id: str, colour: str) -> bool:
        node = diagram.nodes[node_id]
        return node.kind == colour and node.phase.is_zero and diagram.degree(node_id) == 3 \
            and diagram.self_loops(node_id) == 0

    @staticmethod
    def _external(diagram: Diagram, node_id: str, pattern) -> Optional[str]:
        outside = [other for other in diagram.neighbours(node_id) if other not in pattern]
        return outside[0] if len(outside) == 1 else None

    def _forward_matches(self, diagram):
        multiplicities = diagram.edge_multiplicities()

        def edges(a, b):
            return multiplicities[tuple(sorted((a, b)))]

        found = []
        first = [v for v in spider_ids(diagram, self.colour) if self._plain(diagram, v, self.colour)]
        second = [v for v in spider_ids(diagram, self.other) if self._plain(diagram, v, self.other)]
        for a1, a2 in combinations(first, 2):
            for b1, b2 in combinations(second, 2):
                if any(edges(a, b) != 1 for a in (a1, a2) for b in (b1, b2)):
                    continue
                pattern = {a1, a2, b1, b2}
                if all(self._external(diagram, v, pattern) is not None for v in pattern):
                    found.append(((a1, a2, b1, b2), {}))
        return found

    def _rewrite_forward(self, editor, match):
        diagram = editor.to_diagram()
        pattern = set(match.nodes)
        externals = [self._external(diagram, v, pattern) for v in match.nodes]
        for v in match.nodes:
            editor.detach(v)
        top = editor.add_node(Node(self.other))
        bottom = editor.add_node(Node(self.colour))
        editor.add_edge(top, bottom)
        for node_id, external in zip((top, top, bottom, bottom), externals):
            editor.add_edge(node_id, external)

    def _backward_matches(self, diagram):
        found = []
        multiplicities = diagram.edge_multiplicities()
        for top in spider_ids(diagram, self.other):
            if not self._plain(diagram, top, self.other):
                continue
            for bottom in spider_ids(diagram, self.colour):
                if self._plain(diagram, bottom, self.colour) \
                        and multiplicities[tuple(sorted((top, bottom)))] == 1:
                    found.append(((top, bottom), {}))
        return found

    def _rewrite_backward(self, editor, match):
        top, bottom = match.nodes
        top_legs = [other for _, other in editor.incident(top) if other != bottom]
        bottom_legs = [other for _, other in editor.incident(bottom) if other != top]
        editor.detach(top)
        editor.detach(bottom)
        firsts = [editor.add_node(Node(self.colour)) for _ in top_legs]
        seconds = [editor.add_node(Node(self.other)) for _ in bottom_legs]
        for node_id, leg in zip(firsts + seconds, top_legs + bottom_legs):
            editor.add_edge(node_id, leg)
        for a in firsts:
            for b in seconds:
                editor.add_edge(a, b)

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        nodes = {"a1": Node(self.colour), "a2": Node(self.colour),
                 "b1": Node(self.other), "b2": Node(self.other)}
        internal = [(a, b) for a in ("a1", "a2") for b in ("b1", "b2")]
        return [schema(nodes, internal, ["a1", "a2", "b1", "b2"]),
                schema(nodes, internal, ["a1", "b1", "a2", "b2"])]
