import numpy as np
import pytest
from toybits.LocalOp import LocalOp, all_local_ops, green_ops, reduced_ops
from toybits.Phase import ALL_PHASES, Phase
from toybits.utils import bits_to_ontic, ontic_to_bits


@pytest.mark.parametrize("phase, expected", [
    [Phase(0, 0), (1, 2, 3, 4)],
    [Phase(0, 1), (1, 2, 4, 3)],
    [Phase(1, 0), (2, 1, 3, 4)],
    [Phase(1, 1), (2, 1, 4, 3)],
])
def test_green_phase_shifts(phase, expected):
    assert LocalOp.green(phase).permutation == expected


@pytest.mark.parametrize("phase, expected", [
    [Phase(0, 0), (1, 2, 3, 4)],
    [Phase(0, 1), (1, 4, 3, 2)],
    [Phase(1, 0), (3, 2, 1, 4)],
    [Phase(1, 1), (3, 4, 1, 2)],
])
def test_red_phase_shifts(phase, expected):
    assert LocalOp.red(phase).permutation == expected


def test_composition_applies_right_factor_first():
    g01 = LocalOp.green(Phase(0, 1))
    r01 = LocalOp.red(Phase(0, 1))
    assert (r01 * g01)(3) == r01(g01(3))
    assert g01 * r01 * g01 == LocalOp.hadamard()
    assert LocalOp.hadamard() * LocalOp.hadamard() == LocalOp.identity()


def test_inverse():
    for op in all_local_ops():
        assert op * op.inverse() == LocalOp.identity()


def test_24_operators():
    operators = all_local_ops()
    assert len(operators) == 24, "Expected every permutation of the ontic states."
    assert len({op.permutation for op in operators}) == 24
    assert list(operators) == sorted(operators)


def test_canonical_words_denote_their_operator():
    for op in all_local_ops():
        outer, red, inner = op.canonical_word
        assert LocalOp.from_word(outer, red, inner) == op
    assert str(LocalOp.identity()) == "G(00)·R(00)·G(00)"


def test_canonical_word_is_least():
    for op in all_local_ops():
        words = [(a, b, c) for a in ALL_PHASES for b in ALL_PHASES for c in ALL_PHASES
                 if LocalOp.from_word(a, b, c) == op]
        assert op.canonical_word == min(words)


def test_green_and_red_counts():
    assert len(green_ops()) == 4
    assert all(op.red_count == 0 for op in green_ops())
    assert LocalOp.red(Phase(0, 1)).red_count == 1
    assert not LocalOp.hadamard().is_green


def test_reduced_set_is_pinned_to_six_operators_one_per_state():
    operators = reduced_ops()
    assert len(operators) == 6, "Expected the reduced set to hold exactly six operators: four green, two red."
    assert len({op.vertex_state for op in operators}) == 6, "Expected one reduced operator per state."
    assert all(op.is_reduced for op in operators)
    assert sum(1 for op in operators if not op.is_green) == 2


def test_every_state_is_reached_by_four_operators():
    states = {op.vertex_state for op in all_local_ops()}
    assert len(states) == 6
    for state in states:
        found = [op for op in all_local_ops() if op.vertex_state == state]
        assert len(found) == 4, "Expected the stabiliser of a state to have four elements."
    stabiliser = [op for op in all_local_ops() if op.vertex_state == frozenset({1, 3})]
    assert set(stabiliser) == {LocalOp.red(phase) for phase in ALL_PHASES}, \
        "Expected the red phases to fix the bare vertex state."


def test_affine_form():
    for op in all_local_ops():
        linear, shift = op.affine()
        for s in (1, 2, 3, 4):
            bits = np.array(ontic_to_bits(s), dtype=np.uint8)
            z, x = (linear @ bits + shift) % 2
            assert bits_to_ontic(int(z), int(x)) == op(s)


def test_invalid_permutation():
    with pytest.raises(AssertionError) as msg:
        LocalOp((1, 1, 2, 3))
    assert "Expected a permutation" in str(msg.value)
