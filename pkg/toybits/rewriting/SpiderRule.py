from itertools import product as cartesian_product
from typing import List
from ..Diagram import Diagram, Node
from ..Phase import ALL_PHASES, Phase
from .BaseRule import BaseRule, schema, spider_ids


class SpiderRule(BaseRule):
    """Fuse two same-coloured spiders joined by at least one edge; phases add.

    Extra edges between the pair become self-loops on the fused spider. The reverse
    direction splits a spider into two joined spiders, optionally moving one leg to
    the new spider.

    .. testcode::

        from toybits.generators import green_spider
        from toybits.diagram_operations import seq
        from toybits.rewriting import SpiderRule

        diagram = seq(green_spider(1, 1, "01"), green_spider(1, 1, "10"))
        rule = SpiderRule("Z")
        fused = rule.apply(diagram, rule.find_matches(diagram)[0])
        print([str(node.phase) for node in fused.nodes.values()])

    Should output

    .. testoutput::

        ['11']

    """
    name = "spider"

    def combine_phases(self, first: Phase, second: Phase) -> Phase:
        return first + second

    def _forward_matches(self, diagram):
        spiders = spider_ids(diagram, self.colour)
        multiplicities = diagram.edge_multiplicities()
        return [((u, v), {}) for k, u in enumerate(spiders) for v in spiders[k + 1:]
                if multiplicities[(u, v)] > 0]

    def _rewrite_forward(self, editor, match):
        u, v = match.nodes
        phase = self.combine_phases(editor.nodes[u].phase, editor.nodes[v].phase)
        editor.remove_edge(u, v)
        editor.redirect(v, u)
        del editor.nodes[v]
        editor.set_node(u, Node(self.colour, phase))

    def _backward_matches(self, diagram):
        found = []
        for v in spider_ids(diagram, self.colour):
            legs = sorted({other for other in diagram.neighbours(v) if other != v})
            for phase, leg in cartesian_product(ALL_PHASES, [None] + legs):
                found.append(((v,), {"phase": str(phase), "leg": leg}))
        return found

    def _rewrite_backward(self, editor, match):
        (v,) = match.nodes
        phase = Phase.from_string(match.param("phase"))
        leg = match.param("leg")
        w = editor.add_node(Node(self.colour, phase))
        if leg is not None:
            editor.remove_edge(v, leg)
            editor.add_edge(w, leg)
        editor.add_edge(v, w)
        editor.set_node(v, Node(self.colour, editor.nodes[v].phase + phase))

    def schema_instances(self, max_legs: int) -> List[Diagram]:
        patterns = []
        for n_edges in (1, 2):
            for first_legs in range(max_legs + 1):
                for second_legs in range(max_legs + 1 - first_legs):
                    for p, q in cartesian_product(ALL_PHASES, repeat=2):
                        nodes = {"a": Node(self.colour, p), "b": Node(self.colour, q)}
                        patterns.append(schema(nodes, [("a", "b")] * n_edges,
                                               ["a"] * first_legs + ["b"] * second_legs))
        return patterns
