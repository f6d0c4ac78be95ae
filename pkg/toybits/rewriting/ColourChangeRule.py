from typing import List
from ..constants import HADAMARD
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES
from .BaseRule import BaseRule, schema, spider_ids


class ColourChangeRule(BaseRule):
    """A spider whose every leg passes through an H node changes colour.

    The H nodes are removed and the phase is kept. The reverse direction flips the
    colour of a spider of the other colour and puts an H node on each of its legs;
    a self-loop receives two.
    """
    name = "colour_change"

    def _forward_matches(self, diagram):
        found = []
        for x in spider_ids(diagram, self.colour):
            legs = diagram.neighbours(x)
            if len(set(legs)) != len(legs) or x in legs:
                continue
            if not all(diagram.nodes.get(h, Node(self.colour)).kind == HADAMARD for h in legs):
                continue
            outside = [other for h in legs for other in diagram.neighbours(h) if other != x]
            if all(other not in legs for other in outside) and len(outside) == len(legs):
                found.append(((x,) + tuple(sorted(legs)), {}))
        return found

    def _rewrite_forward(self, editor, match):
        x, *hadamards = match.nodes
        for h in hadamards:
            editor.splice_out(h)
        editor.set_node(x, editor.nodes[x].with_colour(self.other))

    def _backward_matches(self, diagram):
        return [((x,), {}) for x in spider_ids(diagram, self.other)]

    def _rewrite_backward(self, editor, match):
        (x,) = match.nodes
        loops = sum(1 for a, b in editor.edges if a == b == x)
        editor.edges = [edge for edge in editor.edges if edge != (x, x)]
        for index in sorted({index for index, _ in editor.incident(x)}, reverse=True):
            editor.insert_on_edge(index, Node(HADAMARD))
        for _ in range(loops):
            first = editor.add_node(Node(HADAMARD))
            second = editor.add_node(Node(HADAMARD))
            editor.edges.extend([(x, first), (first, second), (second, x)])
        editor.set_node(x, editor.nodes[x].with_colour(self.colour))

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        patterns = []
        for phase in ALL_PHASES:
            for legs in range(max_legs + 1):
                hadamards = [f"h{k}" for k in range(legs)]
                nodes = {"x": Node(self.colour, phase), **{h: Node(HADAMARD) for h in hadamards}}
                patterns.append(schema(nodes, [("x", h) for h in hadamards], hadamards))
        return patterns
