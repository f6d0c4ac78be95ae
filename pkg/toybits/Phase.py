from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True, order=True)
class Phase:
    """Element of the toy phase group Z2 x Z2, written as the two bits ``xy``.

    Phases combine by bit-wise addition modulo 2, so every phase is its own
    inverse and ``Phase(0, 0)`` is the neutral element.

    .. testcode::

        from toybits.Phase import Phase

        phase = Phase.from_string("01") + Phase.from_string("10")
        print(phase, phase + phase)

    Should output

    .. testoutput::

        11 00

    """
    x: int = 0
    y: int = 0

    def __post_init__(self):
        assert self.x in (0, 1) and self.y in (0, 1), \
            f"Expected phase bits 0 or 1, got ({self.x}, {self.y})."

    @classmethod
    def from_string(cls, label: str) -> "Phase":
        assert isinstance(label, str) and len(label) == 2 and set(label) <= {"0", "1"}, \
            f"Expected a phase label such as '01', got {label!r}."
        return cls(int(label[0]), int(label[1]))

    def __add__(self, other: "Phase") -> "Phase":
        return Phase(self.x ^ other.x, self.y ^ other.y)

    def __str__(self):
        return f"{self.x}{self.y}"

    @property
    def bits(self) -> Tuple[int, int]:
        return self.x, self.y

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def swapped(self) -> "Phase":
        """Phase with its two bits exchanged (effect of commuting past an 11 phase)."""
        return Phase(self.y, self.x)

    def parity(self, common_bit: int) -> int:
        """Parity that the legs of a spider with this phase must add up to.

        A green spider requires all legs to share the same z bit; the x bits must
        then add up to ``x ⊕ (x ⊕ y)·z``. Red spiders swap the roles of z and x.
        """
        return self.x ^ ((self.x ^ self.y) & common_bit)


ZERO_PHASE = Phase(0, 0)
ALL_PHASES = (Phase(0, 0), Phase(0, 1), Phase(1, 0), Phase(1, 1))
