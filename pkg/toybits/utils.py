from itertools import combinations
from typing import List, Tuple
from .typing import EpistemicState


def ontic_to_bits(state: int) -> Tuple[int, int]:
    """Return the bit pair (z, x) of an ontic state, with state = 2 * z + x + 1."""
    assert state in (1, 2, 3, 4), f"Expected an ontic state in 1..4, got {state}."
    return (state - 1) >> 1, (state - 1) & 1


def bits_to_ontic(z: int, x: int) -> int:
    """Return the ontic state with bit pair (z, x)."""
    return 2 * z + x + 1


def two_element_subsets() -> List[EpistemicState]:
    """All six 2-element subsets of the ontic states, in lexicographic order."""
    return [frozenset(pair) for pair in combinations((1, 2, 3, 4), 2)]


def format_ontic_tuple(values) -> str:
    """Write an ontic tuple as a digit string, with '•' for the empty tuple."""
    if len(values) == 0:
        return "•"
    return "".join(str(value) for value in values)
