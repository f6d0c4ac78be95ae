from typing import List
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES, Phase
from .BaseRule import BaseRule, is_phase_shift, schema, spider_ids


ELEVEN = Phase(1, 1)


class ElevenCommutationRule(BaseRule):
    """Move a phase-11 shift past a phase shift of the other colour.

    The other shift keeps its colour and has its two phase bits swapped. The rule
    is its own inverse.
    """
    name = "eleven_commutation"

    def _forward_matches(self, diagram):
        multiplicities = diagram.edge_multiplicities()
        found = []
        for shift in spider_ids(diagram, self.colour):
            if not (is_phase_shift(diagram, shift, self.colour) and diagram.nodes[shift].phase == ELEVEN):
                continue
            for partner in sorted(set(diagram.neighbours(shift))):
                if is_phase_shift(diagram, partner, self.other) \
                        and multiplicities[tuple(sorted((shift, partner)))] == 1:
                    found.append(((shift, partner), {}))
        return found

    def _rewrite_forward(self, editor, match):
        shift, partner = match.nodes
        (before,) = [other for _, other in editor.incident(shift) if other != partner]
        (after,) = [other for _, other in editor.incident(partner) if other != shift]
        for a, b in ((before, shift), (shift, partner), (partner, after)):
            editor.remove_edge(a, b)
        editor.edges.extend([(before, partner), (partner, shift), (shift, after)])
        editor.set_node(partner, Node(self.other, editor.nodes[partner].phase.swapped()))

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        return [schema({"t": Node(self.colour, ELEVEN), "r": Node(self.other, phase)}, [("t", "r")], ["t", "r"])
                for phase in ALL_PHASES]
