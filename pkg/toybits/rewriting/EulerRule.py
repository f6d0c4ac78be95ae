from typing import List
from ..constants import HADAMARD
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES, Phase
from .BaseRule import BaseRule, is_phase_shift, schema, spider_ids


QUARTER = Phase(0, 1)


class EulerRule(BaseRule):
    """An H node equals three phase-01 shifts of alternating colour.

    The outer shifts have the rule's colour.
    """
    name = "euler"

    def _forward_matches(self, diagram):
        return [((h,), {}) for h, node in sorted(diagram.nodes.items())
                if node.kind == HADAMARD and diagram.self_loops(h) == 0]

    def _rewrite_forward(self, editor, match):
        (h,) = match.nodes
        first, last = editor.detach(h)
        chain = [editor.add_node(Node(colour, QUARTER)) for colour in (self.colour, self.other, self.colour)]
        editor.edges.extend(zip([first] + chain, chain + [last]))

    def _is_quarter(self, diagram: Diagram, node_id: str, colour: str) -> bool:
        return is_phase_shift(diagram, node_id, colour) and diagram.nodes[node_id].phase == QUARTER

    def _backward_matches(self, diagram):
        found = []
        for middle in spider_ids(diagram, self.other):
            if not self._is_quarter(diagram, middle, self.other):
                continue
            ends = diagram.neighbours(middle)
            if len(set(ends)) != 2 or not all(self._is_quarter(diagram, end, self.colour) for end in ends):
                continue
            first, last = sorted(ends)
            chain = {first, middle, last}
            outside = [other for end in (first, last) for other in diagram.neighbours(end) if other != middle]
            if all(other not in chain for other in outside):
                found.append(((first, middle, last), {}))
        return found

    def _rewrite_backward(self, editor, match):
        first, middle, last = match.nodes
        (start,) = [other for other in editor.detach(first) if other != middle]
        (end,) = [other for other in editor.detach(last) if other != middle]
        editor.detach(middle)
        h = editor.add_node(Node(HADAMARD))
        editor.edges.extend([(start, h), (h, end)])

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        patterns = [schema({"h": Node(HADAMARD)}, [], ["h", "h"])]
        for phase in ALL_PHASES:
            for legs in range(max_legs + 1):
                nodes = {"h": Node(HADAMARD), "x": Node(self.other, phase)}
                patterns.append(schema(nodes, [("h", "x"), ("h", "x")], ["x"] * legs))
        return patterns
