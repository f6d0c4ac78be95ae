from typing import List
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES, Phase
from .BaseRule import BaseRule, is_phase_shift, schema, spider_ids


ELEVEN = Phase(1, 1)


class ElevenCopyRule(BaseRule):
    """A phase-11 shift is copied by a spider of the other colour.

    The shift moves from one leg of the spider onto all its other legs, and the two
    bits of the spider's phase are swapped. Self-loops of the spider are left alone.
    """
    name = "eleven_copy"

    def _is_shift(self, diagram: Diagram, node_id: str) -> bool:
        return is_phase_shift(diagram, node_id, self.colour) and diagram.nodes[node_id].phase == ELEVEN

    def _forward_matches(self, diagram):
        multiplicities = diagram.edge_multiplicities()
        found = []
        for shift in spider_ids(diagram, self.colour):
            if not self._is_shift(diagram, shift):
                continue
            for target in sorted(set(diagram.neighbours(shift))):
                node = diagram.nodes.get(target)
                if node is not None and node.kind == self.other \
                        and multiplicities[tuple(sorted((shift, target)))] == 1:
                    found.append(((shift, target), {}))
        return found

    def _rewrite_forward(self, editor, match):
        shift, target = match.nodes
        (outside,) = [other for other in editor.detach(shift) if other != target]
        editor.add_edge(outside, target)
        kept = len(editor.edges) - 1
        legs = sorted({index for index, other in editor.incident(target) if other != target and index != kept},
                      reverse=True)
        for index in legs:
            editor.insert_on_edge(index, Node(self.colour, ELEVEN))
        editor.set_node(target, Node(self.other, editor.nodes[target].phase.swapped()))

    def _backward_matches(self, diagram):
        found = []
        for target in spider_ids(diagram, self.other):
            legs = [other for other in diagram.neighbours(target) if other != target]
            for chosen in sorted(set(legs)):
                rest = list(legs)
                rest.remove(chosen)
                if chosen not in rest and len(set(rest)) == len(rest) and all(self._is_shift(diagram, other) for other in rest):
                    found.append(((target,), {"leg": chosen}))
        return found

    def _rewrite_backward(self, editor, match):
        (target,) = match.nodes
        chosen = match.param("leg")
        for other in sorted({other for _, other in editor.incident(target) if other not in (target, chosen)}):
            editor.splice_out(other)
        index = next(index for index, other in editor.incident(target) if other == chosen)
        editor.insert_on_edge(index, Node(self.colour, ELEVEN))
        editor.set_node(target, Node(self.other, editor.nodes[target].phase.swapped()))

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        patterns = []
        for phase in ALL_PHASES:
            for legs in range(max_legs + 1):
                nodes = {"t": Node(self.colour, ELEVEN), "x": Node(self.other, phase)}
                patterns.append(schema(nodes, [("t", "x")], ["t"] + ["x"] * legs))
            nodes = {"t": Node(self.colour, ELEVEN), "x": Node(self.other, phase)}
            patterns.append(schema(nodes, [("t", "x"), ("x", "x")], ["t", "x"]))
        return patterns
