import pytest
from toybits.utils import (bits_to_ontic, format_ontic_tuple, ontic_to_bits,
                           two_element_subsets)


@pytest.mark.parametrize("state, bits", [[1, (0, 0)], [2, (0, 1)], [3, (1, 0)], [4, (1, 1)]])
def test_ontic_bits(state, bits):
    assert ontic_to_bits(state) == bits
    assert bits_to_ontic(*bits) == state


def test_ontic_to_bits_range():
    with pytest.raises(AssertionError) as msg:
        ontic_to_bits(5)
    assert "Expected an ontic state" in str(msg.value)


def test_two_element_subsets():
    subsets = two_element_subsets()
    assert subsets[0] == frozenset({1, 2}) and subsets[-1] == frozenset({3, 4})
    assert len(subsets) == 6


def test_format_ontic_tuple():
    assert format_ontic_tuple(()) == "•"
    assert format_ontic_tuple((1, 4)) == "14"
