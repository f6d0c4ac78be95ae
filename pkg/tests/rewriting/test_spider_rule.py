import pytest
from toybits.generators import green_spider
from toybits.diagram_operations import seq
from toybits.interpretation import interpret
from toybits.rewriting import SpiderRule
from ..builder_Diagram import DiagramBuilder


def _labels(diagram):
    return sorted(node.label for node in diagram.nodes.values())


def test_spider_fuses_and_adds_phases():
    diagram = seq(green_spider(1, 1, "01"), green_spider(1, 2, "11"))
    rule = SpiderRule("Z")
    matches = rule.find_matches(diagram)
    assert len(matches) == 1
    fused = rule.apply(diagram, matches[0])
    assert _labels(fused) == ["Z10"]
    assert fused.degree(list(fused.nodes)[0]) == 3
    assert interpret(fused) == interpret(diagram)


def test_spider_extra_edges_become_loops():
    diagram = DiagramBuilder().with_outputs(1).with_green("a").with_green("b", "01") \
        .with_edge("a", "b", 2).with_edge("b", "out0").build()
    rule = SpiderRule("Z")
    fused = rule.apply(diagram, rule.find_matches(diagram)[0])
    assert fused.self_loops("a") == 1, "Expected the second edge to become a self-loop."
    assert interpret(fused) == interpret(diagram)


def test_spider_ignores_other_colour():
    diagram = DiagramBuilder().with_outputs(1).with_green("a").with_red("b") \
        .with_edge("a", "b").with_edge("b", "out0").build()
    assert SpiderRule("Z").find_matches(diagram) == []
    assert SpiderRule("X").find_matches(diagram) == []


def test_spider_reverse_splits():
    diagram = green_spider(1, 2, "10")
    rule = SpiderRule("Z", reverse=True)
    matches = rule.find_matches(diagram)
    assert len(matches) == 4 * 4, "Expected every phase with no leg or one of three legs moved."
    for match in matches:
        split = rule.apply(diagram, match)
        assert len(split.nodes) == 2
        assert interpret(split) == interpret(diagram)


def test_spider_label():
    assert SpiderRule("X", reverse=True, upside_down=True).label == "spider[X]-reverse-upside_down"
    assert SpiderRule().label == "spider[Z]"
    with pytest.raises(AssertionError) as msg:
        SpiderRule("H")
    assert "Expected colour" in str(msg.value)


def test_stale_and_foreign_matches():
    diagram = seq(green_spider(1, 1, "01"), green_spider(1, 1, "10"))
    rule = SpiderRule("Z")
    match = rule.find_matches(diagram)[0]
    with pytest.raises(ValueError) as msg:
        rule.apply(green_spider(1, 1), match)
    assert "Stale match" in str(msg.value)
    with pytest.raises(ValueError) as msg:
        SpiderRule("X").apply(diagram, match)
    assert "cannot be applied" in str(msg.value)
