from functools import lru_cache
from itertools import product as cartesian_product
from typing import Dict, FrozenSet, Iterable, Tuple
import numpy as np
from .constants import GRAPH_VERTEX_STATE
from .Phase import ALL_PHASES, ZERO_PHASE, Phase
from .utils import bits_to_ontic, ontic_to_bits


Word = Tuple[Phase, Phase, Phase]


class LocalOp:
    """A reversible single-toy-bit operator: a permutation of the ontic states 1..4.

    ``op * other`` is the composite that applies ``other`` first. Every operator
    has a canonical word G(ab)·R(cd)·G(ef), the lexicographically least such word
    denoting it; the rightmost factor acts first, closest to the graph when the
    operator sits on a graph-state vertex.

    .. testcode::

        from toybits.LocalOp import LocalOp

        h = LocalOp.hadamard()
        print(h.permutation, h)

    Should output

    .. testoutput::

        (1, 3, 2, 4) G(01)·R(01)·G(01)

    """
    def __init__(self, permutation: Iterable[int]):
        permutation = tuple(permutation)
        assert sorted(permutation) == [1, 2, 3, 4], \
            f"Expected a permutation of the ontic states, got {permutation}."
        self._permutation = permutation

    @classmethod
    def identity(cls) -> "LocalOp":
        return cls((1, 2, 3, 4))

    @classmethod
    def green(cls, phase: Phase) -> "LocalOp":
        """Green phase shift: flips x where the phase parity of z is 1."""
        images = []
        for s in (1, 2, 3, 4):
            z, x = ontic_to_bits(s)
            images.append(bits_to_ontic(z, x ^ phase.parity(z)))
        return cls(images)

    @classmethod
    def red(cls, phase: Phase) -> "LocalOp":
        """Red phase shift: flips z where the phase parity of x is 1."""
        images = []
        for s in (1, 2, 3, 4):
            z, x = ontic_to_bits(s)
            images.append(bits_to_ontic(z ^ phase.parity(x), x))
        return cls(images)

    @classmethod
    def hadamard(cls) -> "LocalOp":
        return cls((1, 3, 2, 4))

    @classmethod
    def from_word(cls, outer: Phase, red: Phase, inner: Phase) -> "LocalOp":
        return cls.green(outer) * cls.red(red) * cls.green(inner)

    @property
    def permutation(self) -> Tuple[int, int, int, int]:
        return self._permutation

    def __call__(self, state: int) -> int:
        return self._permutation[state - 1]

    def __mul__(self, other: "LocalOp") -> "LocalOp":
        return LocalOp(self(other(s)) for s in (1, 2, 3, 4))

    def __eq__(self, other):
        return isinstance(other, LocalOp) and self._permutation == other.permutation

    def __hash__(self):
        return hash(self._permutation)

    def __lt__(self, other):
        return self._permutation < other.permutation

    def __repr__(self):
        return f"LocalOp({self._permutation})"

    def __str__(self):
        outer, red, inner = self.canonical_word
        return f"G({outer})·R({red})·G({inner})"

    def inverse(self) -> "LocalOp":
        images = [0] * 4
        for s in (1, 2, 3, 4):
            images[self(s) - 1] = s
        return LocalOp(images)

    def image(self, states: Iterable[int]) -> FrozenSet[int]:
        return frozenset(self(s) for s in states)

    @property
    def vertex_state(self) -> FrozenSet[int]:
        """Image of the bare graph-vertex state {1,3}."""
        return self.image(GRAPH_VERTEX_STATE)

    @property
    def canonical_word(self) -> Word:
        return _canonical_words()[self._permutation]

    @property
    def is_green(self) -> bool:
        return self in green_ops()

    @property
    def red_count(self) -> int:
        """Number of non-trivial red factors in the canonical word (0 or 1)."""
        return 0 if self.canonical_word[1] == ZERO_PHASE else 1

    @property
    def is_reduced(self) -> bool:
        return self in reduced_ops()

    def affine(self) -> Tuple[np.ndarray, np.ndarray]:
        """(M, t) with bits(op(s)) = M @ bits(s) + t over GF(2), bits ordered (z, x)."""
        t = np.array(ontic_to_bits(self(1)), dtype=np.uint8)
        z_image = np.array(ontic_to_bits(self(bits_to_ontic(1, 0))), dtype=np.uint8) ^ t
        x_image = np.array(ontic_to_bits(self(bits_to_ontic(0, 1))), dtype=np.uint8) ^ t
        return np.stack([z_image, x_image], axis=1), t


@lru_cache(maxsize=None)
def _canonical_words() -> Dict[Tuple[int, ...], Word]:
    words = {}
    for outer, red, inner in cartesian_product(ALL_PHASES, repeat=3):
        permutation = LocalOp.from_word(outer, red, inner).permutation
        words.setdefault(permutation, (outer, red, inner))
    return words


@lru_cache(maxsize=None)
def all_local_ops() -> Tuple[LocalOp, ...]:
    """All reversible single-toy-bit operators reachable by G·R·G words, sorted."""
    return tuple(sorted(LocalOp(permutation) for permutation in _canonical_words()))


@lru_cache(maxsize=None)
def green_ops() -> FrozenSet[LocalOp]:
    return frozenset(LocalOp.green(phase) for phase in ALL_PHASES)


@lru_cache(maxsize=None)
def reduced_ops() -> Tuple[LocalOp, ...]:
    """Operators allowed on a reduced graph-state vertex.

    One operator for every single-toy-bit state: the four green phases, and the red
    phase 01 applied after a green 01 or 10 phase for the two states that fix z.
    """
    red01 = LocalOp.red(Phase(0, 1))
    return tuple(LocalOp.green(phase) for phase in ALL_PHASES) + \
        (red01 * LocalOp.green(Phase(0, 1)), red01 * LocalOp.green(Phase(1, 0)))
