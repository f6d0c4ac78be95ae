from typing import List
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES
from .BaseRule import BaseRule, schema, spider_ids


class LoopRule(BaseRule):
    """Remove one self-loop from a spider; the reverse direction adds one."""
    name = "loop"

    def _forward_matches(self, diagram):
        return [((v,), {}) for v in spider_ids(diagram, self.colour) if diagram.self_loops(v) > 0]

    def _rewrite_forward(self, editor, match):
        (v,) = match.nodes
        editor.remove_edge(v, v)

    def _backward_matches(self, diagram):
        return [((v,), {}) for v in spider_ids(diagram, self.colour)]

    def _rewrite_backward(self, editor, match):
        (v,) = match.nodes
        editor.add_edge(v, v)

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        return [schema({"a": Node(self.colour, phase)}, [("a", "a")] * loops, ["a"] * legs)
                for loops in (1, 2) for legs in range(max_legs + 1) for phase in ALL_PHASES]
