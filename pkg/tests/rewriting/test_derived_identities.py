import pytest
from toybits import Diagram, Node, Phase
from toybits.diagram_operations import iso_equal, seq
from toybits.generators import hadamard, state, wire
from toybits.interpretation import interpret
from toybits.rewriting import RewriteProcessor, drop_scalars, get_rule_by_name
from ..builder_Diagram import DiagramBuilder


def _rewrite(diagram, name, choose=None, **settings):
    """Apply the first match of one rule (optionally filtered) and check the relation is kept."""
    rule = get_rule_by_name(name, **settings)
    matches = [match for match in rule.find_matches(diagram) if choose is None or choose(diagram, match)]
    assert matches, f"Expected {rule.label} to match."
    rewritten = rule.apply(diagram, matches[0])
    assert interpret(rewritten) == interpret(diagram), f"Expected {rule.label} to keep the relation."
    return rewritten


def _splits_off_eleven(diagram, match):
    leg = match.param("leg")
    return match.param("phase") == "11" and diagram.degree(match.nodes[0]) == 1 \
        and leg is not None and diagram.nodes[leg].kind == "X"


def test_hadamard_is_self_inverse():
    processor = RewriteProcessor(["euler",
                                  ["spider", {"colour": "Z"}], ["identity", {"colour": "Z"}],
                                  ["spider", {"colour": "X"}], ["identity", {"colour": "X"}]])
    result, report = processor.process(seq(hadamard(), hadamard()))
    assert iso_equal(result, wire()), "Expected H followed by H to rewrite to a plain wire."
    assert report.n_steps == 8


def test_red_and_green_01_states_are_equal():
    diagram = state("X", "01")
    diagram = _rewrite(diagram, "colour_change", colour="Z", reverse=True)
    diagram = _rewrite(diagram, "euler", colour="Z")
    diagram = _rewrite(diagram, "spider", colour="Z")
    diagram = _rewrite(diagram, "copy", colour="X")
    diagram = _rewrite(diagram, "spider", colour="Z")
    assert iso_equal(diagram, state("Z", "01"))


def test_red_and_green_10_states_are_equal():
    diagram = state("X", "10")
    diagram = _rewrite(diagram, "colour_change", colour="Z", reverse=True)
    diagram = _rewrite(diagram, "euler", colour="Z")
    diagram = _rewrite(diagram, "spider", colour="Z")
    assert sorted(node.label for node in diagram.nodes.values()) == ["X01", "Z01", "Z11"]
    diagram = _rewrite(diagram, "spider", choose=_splits_off_eleven, colour="Z", reverse=True)
    diagram = _rewrite(diagram, "eleven_copy", colour="Z")
    diagram = _rewrite(diagram, "copy", colour="X")
    diagram = _rewrite(diagram, "spider", colour="Z")
    diagram = _rewrite(diagram, "spider", colour="Z")
    assert iso_equal(diagram, state("Z", "10"))


@pytest.mark.parametrize("phase", ["01", "10"])
def test_red_and_green_states_with_swapped_bits_denote_the_same_state(phase):
    assert interpret(state("X", phase)) == interpret(state("Z", phase))


def test_hadamard_loop_disappears():
    diagram = DiagramBuilder().with_outputs(1).with_green("s", "01").with_hadamard("h") \
        .with_edge("h", "h").with_edge("s", "out0").build()
    looped = diagram
    diagram = _rewrite(diagram, "identity", choose=lambda d, m: tuple(m.param("edge")) == ("h", "h"), reverse=True)
    diagram = _rewrite(diagram, "euler", colour="Z")
    diagram = _rewrite(diagram, "spider", colour="Z")
    diagram = _rewrite(diagram, "spider", colour="Z")
    cleaned = drop_scalars(diagram)
    assert cleaned is not None, "Expected the loop to be a non-zero scalar."
    assert iso_equal(cleaned, state("Z", "01"))
    assert iso_equal(drop_scalars(looped), state("Z", "01"))


@pytest.mark.parametrize("colour", ["Z", "X"])
def test_eleven_scalar_is_zero(colour):
    scalar = Diagram({"a": Node(colour, Phase(1, 1))}, [])
    assert interpret(scalar).is_empty
    assert drop_scalars(scalar) is None


def test_zero_scalar_from_fusing_a_state_with_an_effect():
    diagram = DiagramBuilder().with_green("a", "01").with_green("b", "10").with_edge("a", "b").build()
    fused = _rewrite(diagram, "spider", colour="Z")
    assert iso_equal(fused, Diagram({"c": Node("Z", Phase(1, 1))}, []))
    assert interpret(fused).is_empty
