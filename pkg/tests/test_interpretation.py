import numpy as np
import pytest
from toybits import Diagram, Node, Phase, Relation
from toybits.diagram_operations import bend, dagger, par, seq, unbend
from toybits.generators import (bell_state, cap, cup, effect, euler_chain,
                                green_spider, hadamard, join, phase_shift,
                                red_spider, split, state, swap, wire)
from toybits.interpretation import interpret
from toybits.LocalOp import all_local_ops
from toybits.normalform import GSLO
from toybits.random_diagrams import random_diagram
from toybits.relation_operations import compose, converse, product
from .builder_Diagram import DiagramBuilder


def state_relation(*values):
    return Relation.state([(value,) for value in values], 1)


@pytest.mark.parametrize("colour, phase, expected", [
    ["Z", "00", {1, 3}],
    ["Z", "01", {1, 4}],
    ["Z", "10", {2, 3}],
    ["Z", "11", {2, 4}],
    ["X", "00", {1, 2}],
    ["X", "01", {1, 4}],
    ["X", "10", {2, 3}],
    ["X", "11", {3, 4}],
])
def test_interpret_phase_states(colour, phase, expected):
    relation = interpret(state(colour, phase))
    assert relation == state_relation(*sorted(expected)), f"Expected state {sorted(expected)}."


def test_interpret_split_and_join():
    expected_split = Relation(1, 2, [((1,), (1, 1)), ((1,), (2, 2)), ((2,), (1, 2)), ((2,), (2, 1)),
                                     ((3,), (3, 3)), ((3,), (4, 4)), ((4,), (3, 4)), ((4,), (4, 3))])
    assert interpret(split()) == expected_split
    assert interpret(join()) == converse(expected_split)


def test_interpret_hadamard_cup_cap_swap():
    assert interpret(hadamard()) == Relation.from_permutation((1, 3, 2, 4))
    expected_cup = Relation.state([(s, s) for s in (1, 2, 3, 4)], 2)
    assert interpret(cup()) == expected_cup
    assert interpret(cap()) == converse(expected_cup)
    assert interpret(swap()) == Relation(2, 2, [((a, b), (b, a)) for a in (1, 2, 3, 4) for b in (1, 2, 3, 4)])


def test_interpret_wire_and_effect():
    assert interpret(wire()) == Relation.identity(1)
    assert interpret(effect()) == converse(state_relation(1, 3))


def test_interpret_euler_chain_is_hadamard():
    assert interpret(euler_chain("Z")) == interpret(hadamard())
    assert interpret(euler_chain("X")) == interpret(hadamard())


@pytest.mark.parametrize("phase, empty", [["00", False], ["01", False], ["10", False], ["11", True]])
def test_interpret_scalar_spiders(phase, empty):
    scalar = Diagram({"a": Node("Z", Phase.from_string(phase))}, [])
    assert interpret(scalar).is_empty == empty, "Expected only the 11 scalar to be zero."
    assert interpret(scalar).is_scalar


def test_interpret_copy_rule_left_hand_side():
    diagram = seq(state("Z"), red_spider(1, 2))
    assert interpret(diagram) == Relation.state([(1, 1), (1, 3), (3, 1), (3, 3)], 2)


def test_interpret_hadamard_loop_is_nonzero_scalar():
    diagram = DiagramBuilder().with_green("a").with_hadamard("h").with_chain("a", "h", "a").build()
    assert interpret(diagram) == Relation(0, 0, [((), ())])


def test_interpret_self_loop_is_removable():
    looped = DiagramBuilder().with_outputs(1).with_green("a", "01").with_edge("a", "a") \
        .with_edge("a", "out0").build()
    assert interpret(looped) == interpret(state("Z", "01"))


def test_bell_state():
    assert interpret(bell_state()) == Relation.state([(1, 1), (2, 2), (3, 3), (4, 4)], 2)


def test_snake_equation():
    snake = seq(par(cup(), wire()), par(wire(), cap()))
    assert interpret(snake) == Relation.identity(1)


def test_bend_and_unbend():
    assert interpret(bend(wire())) == interpret(cup())
    assert interpret(bend(state("Z", "01"))) == interpret(state("Z", "01"))
    assert interpret(unbend(bend(hadamard()), 1)) == interpret(hadamard())


def wires(k):
    diagram = wire()
    for _ in range(k - 1):
        diagram = par(diagram, wire())
    return diagram


def fan_out(diagram):
    """Split the last output in two."""
    rest = diagram.n_outputs - 1
    return seq(diagram, split() if rest == 0 else par(wires(rest), split()))


@pytest.mark.parametrize("n_inputs, n_outputs", [[0, 1], [1, 1], [1, 2], [2, 1], [2, 2], [0, 3], [3, 0], [1, 4]])
def test_spider_theorem_for_split_join_composites(n_inputs, n_outputs):
    """A connected network of splits and joins is the green spider with the same legs."""
    diagram = [state(), wire(), join(), seq(par(join(), wire()), join())][n_inputs]
    for _ in range(n_outputs - 1):
        diagram = fan_out(diagram)
    if n_outputs == 0:
        diagram = seq(diagram, effect())
    assert (diagram.n_inputs, diagram.n_outputs) == (n_inputs, n_outputs)
    assert interpret(diagram) == interpret(green_spider(n_inputs, n_outputs))


def test_spider_theorem_with_swaps():
    diagram = seq(seq(split(), swap()), join())
    assert interpret(diagram) == interpret(green_spider(1, 1))
    diagram = seq(par(state(), state()), join())
    assert interpret(diagram) == interpret(state())


def test_phase_states_add_through_join():
    for first in ("00", "01", "10", "11"):
        for second in ("00", "01", "10", "11"):
            combined = seq(par(state("Z", first), state("Z", second)), join())
            expected = Phase.from_string(first) + Phase.from_string(second)
            assert interpret(combined) == interpret(state("Z", str(expected))), \
                f"Expected {first} + {second} = {expected}."


def test_six_normal_form_states():
    relations = {interpret(GSLO(np.zeros((1, 1)), [op]).to_diagram()) for op in all_local_ops()}
    assert len(relations) == 6, "Expected exactly six single toy bit states."


def test_24_reversible_operators():
    relations = set()
    for op in all_local_ops():
        outer, red, inner = op.canonical_word
        chain = seq(seq(phase_shift("Z", inner), phase_shift("X", red)), phase_shift("Z", outer))
        relation = interpret(chain)
        assert relation == Relation.from_permutation(op.permutation), f"Expected {op} to match its word."
        relations.add(relation)
    assert len(relations) == 24, "Expected all 24 permutations of the ontic states."


def test_functoriality_on_random_diagrams():
    rng = np.random.default_rng(12)
    for _ in range(40):
        first = random_diagram(rng, max_outputs=2, max_nodes=5, n_inputs=int(rng.integers(0, 3)))
        second = random_diagram(rng, max_outputs=2, max_nodes=5, n_inputs=first.n_outputs)
        assert interpret(seq(first, second)) == compose(interpret(first), interpret(second)), \
            "Expected sequential composition to compose relations."
        assert interpret(par(first, second)) == product(interpret(first), interpret(second)), \
            "Expected parallel composition to give the product."
        assert interpret(dagger(first)) == converse(interpret(first)), "Expected dagger to give the converse."
