import os
import numpy as np
import pytest
from toybits.diagram_operations import bend
from toybits.generators import bell_state, hadamard, state
from toybits.importing import diagram_from_text, load_diagram
from toybits.interpretation import interpret
from toybits.normalform import to_gslo
from toybits.random_diagrams import random_diagram, random_state_diagram
from ..builder_Diagram import DiagramBuilder


module_root = os.path.join(os.path.dirname(__file__), "..")
testdata = os.path.join(module_root, "testdata")


def _assert_same_state(diagram):
    gslo = to_gslo(diagram)
    relation = interpret(diagram)
    if relation.is_empty:
        assert gslo is None, "Expected the empty relation to give no graph state."
    else:
        assert gslo is not None, "Expected a graph state for a non-empty relation."
        assert gslo.n == diagram.n_outputs
        assert interpret(gslo.to_diagram()) == relation


@pytest.mark.parametrize("filename", ["state00.toy", "bell.toy", "bell_h.toy", "k2.toy", "state01.json"])
def test_to_gslo_fixtures(filename):
    _assert_same_state(load_diagram(os.path.join(testdata, filename)))


def test_to_gslo_zero():
    assert to_gslo(load_diagram(os.path.join(testdata, "zero.toy"))) is None


@pytest.mark.parametrize("colour", ["Z", "X"])
@pytest.mark.parametrize("phase", ["00", "01", "10", "11"])
def test_to_gslo_single_states(colour, phase):
    _assert_same_state(state(colour, phase))


def test_to_gslo_bent_hadamard_and_bell():
    _assert_same_state(bend(hadamard()))
    _assert_same_state(bell_state())


def test_to_gslo_loops_and_parallel_edges():
    diagram = DiagramBuilder().with_outputs(2).with_green("a", "01").with_red("b", "10") \
        .with_edge("a", "b", 2).with_edge("a", "a").with_edge("a", "out0").with_edge("b", "out1").build()
    _assert_same_state(diagram)


def test_to_gslo_bare_wires():
    diagram = DiagramBuilder().with_outputs(2).with_edge("out0", "out1").build()
    _assert_same_state(diagram)


@pytest.mark.parametrize("block", range(5))
def test_to_gslo_random_states(block):
    for seed in range(100 * block, 100 * (block + 1)):
        rng = np.random.default_rng(seed)
        _assert_same_state(random_state_diagram(rng, max_outputs=4, max_nodes=20))


@pytest.mark.parametrize("seed", range(10))
def test_to_gslo_random_bent_diagrams(seed):
    rng = np.random.default_rng(100 + seed)
    _assert_same_state(bend(random_diagram(rng, max_outputs=2, max_nodes=5, n_inputs=1)))


def test_to_gslo_trace():
    trace = []
    to_gslo(load_diagram(os.path.join(testdata, "k2.toy")), trace)
    assert trace == ["to_gslo: 2 toy bits, 1 edges"]


def test_to_gslo_needs_a_state():
    with pytest.raises(AssertionError) as msg:
        to_gslo(hadamard())
    assert "bend the inputs first" in str(msg.value)


@pytest.mark.parametrize("text, expected", [
    ["outputs 2\nnode n0 X 01\nnode n1 Z 10\nedge n0 n1\nedge n0 out0\nedge n1 out1", "• -> {12,24,33,41}"],
    ["outputs 1\nnode n0 Z 00\nedge n0 n0\nedge n0 out0", "• -> {1,3}"],
    ["outputs 1\nnode n0 X 00\nedge n0 n0\nedge n0 n0\nedge n0 out0", "• -> {1,2}"],
])
def test_to_gslo_against_known_states(text, expected):
    diagram = diagram_from_text(text)
    gslo = to_gslo(diagram)
    assert interpret(gslo.to_diagram()).to_text() == expected
    assert interpret(diagram).to_text() == expected


def test_to_gslo_red_and_green_spiders_joined_by_two_wires():
    diagram = DiagramBuilder().with_outputs(3).with_green("a").with_red("b", "11").with_green("c", "01") \
        .with_edge("a", "b", 2).with_edge("b", "c", 3).with_edge("a", "out0").with_edge("b", "out1") \
        .with_edge("c", "out2").build()
    _assert_same_state(diagram)


def test_to_gslo_hadamard_loop_and_zero_scalar():
    with_loop = DiagramBuilder().with_outputs(1).with_green("a", "01").with_hadamard("h") \
        .with_edge("h", "h").with_edge("a", "out0").build()
    _assert_same_state(with_loop)
    with_zero = DiagramBuilder().with_outputs(1).with_green("a", "01").with_green("z", "11") \
        .with_edge("a", "out0").build()
    assert to_gslo(with_zero) is None


def test_to_gslo_red_states_swap_every_toy_bit():
    diagram = DiagramBuilder().with_outputs(2).with_red("a").with_red("b", "11") \
        .with_edge("a", "out0").with_edge("b", "out1").build()
    gslo = to_gslo(diagram)
    assert not gslo.theta.any()
    assert interpret(gslo.to_diagram()) == interpret(diagram)


def test_to_gslo_scalar_diagram():
    gslo = to_gslo(DiagramBuilder().with_green("a").with_red("b").with_edge("a", "b").build())
    assert gslo.n == 0
