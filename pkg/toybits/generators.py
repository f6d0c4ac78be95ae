"""Constructors for the generator diagrams and a few named compositions."""
from typing import Union
from .constants import GREEN, HADAMARD, RED
from .Diagram import Diagram, Node
from .diagram_operations import seq
from .Phase import ZERO_PHASE, Phase


PhaseLike = Union[Phase, str]


def _phase(phase: PhaseLike) -> Phase:
    if isinstance(phase, str):
        return Phase.from_string(phase)
    return phase


def wire() -> Diagram:
    return Diagram({}, [("in0", "out0")], 1, 1)


def empty() -> Diagram:
    """The empty diagram, denoting the non-zero scalar."""
    return Diagram()


def spider(colour: str, n_inputs: int, n_outputs: int, phase: PhaseLike = ZERO_PHASE) -> Diagram:
    """A single spider of the given colour with its legs attached to the boundary."""
    assert colour in (GREEN, RED), f"Expected colour {GREEN} or {RED}, got {colour!r}."
    edges = [("s", f"in{k}") for k in range(n_inputs)] + [("s", f"out{k}") for k in range(n_outputs)]
    return Diagram({"s": Node(colour, _phase(phase))}, edges, n_inputs, n_outputs)


def green_spider(n_inputs: int, n_outputs: int, phase: PhaseLike = ZERO_PHASE) -> Diagram:
    return spider(GREEN, n_inputs, n_outputs, phase)


def red_spider(n_inputs: int, n_outputs: int, phase: PhaseLike = ZERO_PHASE) -> Diagram:
    return spider(RED, n_inputs, n_outputs, phase)


def state(colour: str = GREEN, phase: PhaseLike = ZERO_PHASE) -> Diagram:
    return spider(colour, 0, 1, phase)


def effect(colour: str = GREEN, phase: PhaseLike = ZERO_PHASE) -> Diagram:
    return spider(colour, 1, 0, phase)


def phase_shift(colour: str, phase: PhaseLike) -> Diagram:
    return spider(colour, 1, 1, phase)


def split(colour: str = GREEN) -> Diagram:
    return spider(colour, 1, 2)


def join(colour: str = GREEN) -> Diagram:
    return spider(colour, 2, 1)


def hadamard() -> Diagram:
    return Diagram({"h": Node(HADAMARD)}, [("in0", "h"), ("h", "out0")], 1, 1)


def cup() -> Diagram:
    return Diagram({}, [("out0", "out1")], 0, 2)


def cap() -> Diagram:
    return Diagram({}, [("in0", "in1")], 2, 0)


def swap() -> Diagram:
    return Diagram({}, [("in0", "out1"), ("in1", "out0")], 2, 2)


def euler_chain(colour: str = GREEN) -> Diagram:
    """Phase shifts 01 of alternating colours, starting and ending with ``colour``."""
    other = RED if colour == GREEN else GREEN
    return seq(seq(phase_shift(colour, "01"), phase_shift(other, "01")), phase_shift(colour, "01"))


def bell_state() -> Diagram:
    """Two toy bits with equal ontic states, written as a green state followed by a split."""
    return seq(state(), split())
