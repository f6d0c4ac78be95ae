from itertools import combinations
from typing import List
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES
from .BaseRule import BaseRule, schema, spider_ids


class CopyRule(BaseRule):
    """A phase-00 state of the other colour is copied through a spider.

    The spider may carry any phase and any number of further legs, including none.
    The reverse direction merges two such states into a spider fed by a new state.
    """
    name = "copy"

    def _is_state(self, diagram: Diagram, node_id: str) -> bool:
        node = diagram.nodes.get(node_id)
        return node is not None and node.kind == self.other and node.phase.is_zero \
            and diagram.degree(node_id) == 1 and diagram.self_loops(node_id) == 0

    def _forward_matches(self, diagram):
        found = []
        for x in spider_ids(diagram, self.colour):
            if diagram.self_loops(x) > 0:
                continue
            for state in sorted(set(diagram.neighbours(x))):
                if self._is_state(diagram, state):
                    found.append(((x, state), {}))
        return found

    def _rewrite_forward(self, editor, match):
        x, state = match.nodes
        others = editor.detach(x)
        others.remove(state)
        editor.detach(state)
        for endpoint in others:
            copy = editor.add_node(Node(self.other))
            editor.add_edge(copy, endpoint)

    def _backward_matches(self, diagram):
        states = [v for v in spider_ids(diagram, self.other) if self._is_state(diagram, v)]
        found = []
        for first, second in combinations(states, 2):
            if {diagram.neighbours(first)[0], diagram.neighbours(second)[0]} & {first, second}:
                continue
            found.append(((first, second), {}))
        return found

    def _rewrite_backward(self, editor, match):
        endpoints = [endpoint for state in match.nodes for endpoint in editor.detach(state)]
        x = editor.add_node(Node(self.colour))
        for endpoint in endpoints:
            editor.add_edge(x, endpoint)
        state = editor.add_node(Node(self.other))
        editor.add_edge(state, x)

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        # two legs are always included: merging needs two copied states
        leg_counts = sorted(set(range(max_legs + 1)) | {2})
        return [schema({"x": Node(self.colour, phase), "s": Node(self.other)}, [("x", "s")], ["x"] * legs)
                for legs in leg_counts for phase in ALL_PHASES]
