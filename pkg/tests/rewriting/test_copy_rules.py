from toybits.generators import green_spider, red_spider, state
from toybits.diagram_operations import seq
from toybits.interpretation import interpret
from toybits.rewriting import CopyRule, ElevenCommutationRule, ElevenCopyRule
from ..builder_Diagram import DiagramBuilder, phase_shift_chain


def _labels(diagram):
    return sorted(node.label for node in diagram.nodes.values())


def test_copy_rule():
    diagram = seq(state("X"), green_spider(1, 2, "01"))
    rule = CopyRule("Z")
    result = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert _labels(result) == ["X00", "X00"], "Expected one red state on every other leg."
    assert interpret(result) == interpret(diagram)


def test_copy_rule_without_other_legs():
    diagram = DiagramBuilder().with_green("x", "11").with_red("s").with_edge("x", "s").build()
    rule = CopyRule("Z")
    result = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert result.nodes == {}
    assert interpret(result) == interpret(diagram)


def test_copy_rule_reverse():
    diagram = DiagramBuilder().with_outputs(2).with_red("a").with_red("b") \
        .with_edge("a", "out0").with_edge("b", "out1").build()
    rule = CopyRule("Z", reverse=True)
    matches = rule.find_matches(diagram)
    assert len(matches) == 1
    result = rule.apply(diagram, matches[0])
    assert _labels(result) == ["X00", "Z00"]
    assert interpret(result) == interpret(diagram)


def test_eleven_copy_rule():
    diagram = seq(green_spider(1, 1, "11"), red_spider(1, 2, "01"))
    rule = ElevenCopyRule("Z")
    matches = rule.find_matches(diagram)
    assert len(matches) == 1
    result = rule.apply(diagram, matches[0])
    assert _labels(result) == ["X10", "Z11", "Z11"]
    assert interpret(result) == interpret(diagram)

    reverse = ElevenCopyRule("Z", reverse=True)
    back = [reverse.apply(result, match) for match in reverse.find_matches(result)]
    assert any(_labels(diagram_back) == ["X01", "Z11"] for diagram_back in back)
    assert all(interpret(diagram_back) == interpret(diagram) for diagram_back in back)


def test_eleven_commutation_rule():
    diagram = phase_shift_chain("Z11", "X01")
    rule = ElevenCommutationRule("Z")
    result = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert _labels(result) == ["X10", "Z11"]
    assert result.neighbours("in0") != diagram.neighbours("in0"), "Expected the shifts to trade places."
    assert interpret(result) == interpret(diagram)
    assert ElevenCommutationRule("Z").find_matches(phase_shift_chain("Z01", "X01")) == []
