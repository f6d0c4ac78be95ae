from toybits.generators import green_spider, red_spider, wire
from toybits.interpretation import interpret
from toybits.rewriting import IdentityRule, LoopRule
from ..builder_Diagram import DiagramBuilder


def test_loop_rule_removes_one_loop():
    diagram = DiagramBuilder().with_outputs(1).with_red("a", "11") \
        .with_edge("a", "a", 2).with_edge("a", "out0").build()
    rule = LoopRule("X")
    result = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert result.self_loops("a") == 1
    assert interpret(result) == interpret(diagram)
    assert LoopRule("Z").find_matches(diagram) == []


def test_loop_rule_reverse_adds_loop():
    diagram = red_spider(0, 1, "01")
    rule = LoopRule("X", reverse=True)
    result = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert result.self_loops("s") == 1
    assert interpret(result) == interpret(diagram)


def test_identity_rule_removes_plain_spider():
    diagram = green_spider(1, 1)
    rule = IdentityRule("Z")
    result = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert result == wire()


def test_identity_rule_needs_zero_phase_and_two_legs():
    assert IdentityRule("Z").find_matches(green_spider(1, 1, "01")) == []
    assert IdentityRule("Z").find_matches(green_spider(1, 2)) == []


def test_identity_rule_reverse_places_spider_on_edges():
    diagram = DiagramBuilder().with_inputs(1).with_outputs(1).with_red("a", "10") \
        .with_chain("in0", "a", "out0").build()
    rule = IdentityRule("Z", reverse=True)
    matches = rule.find_matches(diagram)
    assert len(matches) == 2
    for match in matches:
        result = rule.apply(diagram, match)
        assert sorted(node.label for node in result.nodes.values()) == ["X10", "Z00"]
        assert interpret(result) == interpret(diagram)
