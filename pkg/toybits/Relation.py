from itertools import product as cartesian_product
from typing import Iterable, Sequence
from .constants import ONTIC_STATES
from .typing import OnticTuple, RelationPair
from .utils import format_ontic_tuple


class Relation:
    """A finite relation between tuples of ontic states.

    The input side holds tuples of length ``arity_in`` and the output side tuples
    of length ``arity_out``; every entry is an ontic state 1..4. The empty tuple
    stands for the single element of the one-element set, so a state is a relation
    with ``arity_in == 0`` and a scalar has both arities zero.

    .. testcode::

        from toybits import Relation

        state = Relation(0, 1, [((), (1,)), ((), (3,))])
        print(state.to_text())

    Should output

    .. testoutput::

        • -> {1,3}

    Attributes
    ----------
    arity_in:
        Number of toy bits on the input side.
    arity_out:
        Number of toy bits on the output side.
    pairs:
        Frozenset of (input tuple, output tuple) pairs.
    """
    def __init__(self, arity_in: int, arity_out: int, pairs: Iterable[RelationPair] = ()):
        assert isinstance(arity_in, int) and arity_in >= 0, "Expected a non-negative input arity."
        assert isinstance(arity_out, int) and arity_out >= 0, "Expected a non-negative output arity."
        pairs = frozenset((tuple(left), tuple(right)) for left, right in pairs)
        for left, right in pairs:
            assert len(left) == arity_in and len(right) == arity_out, \
                f"Pair {left, right} does not match the arities ({arity_in}, {arity_out})."
            assert all(value in ONTIC_STATES for value in left + right), \
                f"Pair {left, right} contains a value outside the ontic states 1..4."
        self._arity_in = arity_in
        self._arity_out = arity_out
        self._pairs = pairs

    @classmethod
    def identity(cls, n: int = 1) -> "Relation":
        """Identity relation on n toy bits."""
        return cls(n, n, ((values, values) for values in cartesian_product(ONTIC_STATES, repeat=n)))

    @classmethod
    def from_permutation(cls, permutation: Sequence[int]) -> "Relation":
        """Single-toy-bit relation s ~ permutation[s - 1]."""
        assert tuple(sorted(permutation)) == ONTIC_STATES, "Expected a permutation of the ontic states."
        return cls(1, 1, (((s,), (permutation[s - 1],)) for s in ONTIC_STATES))

    @classmethod
    def state(cls, values: Iterable[OnticTuple], n_outputs: int) -> "Relation":
        """State relation • ~ values."""
        return cls(0, n_outputs, (((), tuple(value)) for value in values))

    @property
    def arity_in(self) -> int:
        return self._arity_in

    @property
    def arity_out(self) -> int:
        return self._arity_out

    @property
    def pairs(self) -> frozenset:
        return self._pairs

    @property
    def is_empty(self) -> bool:
        return len(self._pairs) == 0

    @property
    def is_scalar(self) -> bool:
        return self._arity_in == 0 and self._arity_out == 0

    def outputs(self) -> frozenset:
        """Set of output tuples, mostly of interest for states."""
        return frozenset(right for _, right in self._pairs)

    def to_text(self) -> str:
        """Canonical listing: one line per input tuple in lexicographic order.

        An input tuple without related outputs is not listed. The empty relation
        is written ``ZERO``.
        """
        if self.is_empty:
            return "ZERO"
        images = {}
        for left, right in self._pairs:
            images.setdefault(left, []).append(right)
        lines = []
        for left in sorted(images):
            targets = ",".join(format_ontic_tuple(right) for right in sorted(images[left]))
            lines.append(f"{format_ontic_tuple(left)} -> {{{targets}}}")
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return False
        return self._arity_in == other.arity_in \
            and self._arity_out == other.arity_out \
            and self._pairs == other.pairs

    def __hash__(self):
        return hash((self._arity_in, self._arity_out, self._pairs))

    def __len__(self):
        return len(self._pairs)

    def __contains__(self, pair):
        return (tuple(pair[0]), tuple(pair[1])) in self._pairs

    def __iter__(self):
        return iter(sorted(self._pairs))

    def __repr__(self):
        return f"Relation({self._arity_in}, {self._arity_out}, {len(self._pairs)} pairs)"

    def __str__(self):
        return self.to_text()
