from typing import List
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES
from .BaseRule import BaseRule, is_phase_shift, schema, spider_ids


class IdentityRule(BaseRule):
    """A phase-00 spider with two legs is a plain wire.

    The reverse direction places such a spider on any edge.
    """
    name = "identity"

    def _forward_matches(self, diagram):
        return [((v,), {}) for v in spider_ids(diagram, self.colour)
                if is_phase_shift(diagram, v, self.colour) and diagram.nodes[v].phase.is_zero]

    def _rewrite_forward(self, editor, match):
        (v,) = match.nodes
        editor.splice_out(v)

    def _backward_matches(self, diagram):
        return [((), {"edge": edge}) for edge in sorted(set(diagram.edges))]

    def _rewrite_backward(self, editor, match):
        edge = tuple(match.param("edge"))
        index = next(k for k, candidate in enumerate(editor.edges) if tuple(sorted(candidate)) == edge)
        editor.insert_on_edge(index, Node(self.colour))

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        patterns = [schema({"a": Node(self.colour)}, [], ["a", "a"])]
        for phase in ALL_PHASES:
            for legs in range(max_legs + 1):
                nodes = {"a": Node(self.colour), "b": Node(self.other, phase)}
                patterns.append(schema(nodes, [("a", "b"), ("a", "b")], ["b"] * legs))
                patterns.append(schema(nodes, [("a", "b")], ["a"] + ["b"] * legs))
        return patterns
