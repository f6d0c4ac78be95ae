import logging
from typing import List, Optional, Tuple
from .GSLO import GSLO
from .reduction import move_red


logger = logging.getLogger("toybits")


def find_violation(g1: GSLO, g2: GSLO) -> Optional[Tuple[int, int]]:
    """First (p, q) in index order with p red-bearing only in g1, q only in g2, adjacent in either."""
    red1, red2 = set(g1.red_bearing()), set(g2.red_bearing())
    for p in sorted(red1 - red2):
        for q in sorted(red2 - red1):
            if g1.adjacent(p, q) or g2.adjacent(p, q):
                return p, q
    return None


def is_simplified(g1: GSLO, g2: GSLO) -> bool:
    return find_violation(g1, g2) is None


def unpaired_red(g1: GSLO, g2: GSLO) -> List[int]:
    """Toy bits that are red-bearing in exactly one of the two diagrams."""
    return sorted(set(g1.red_bearing()) ^ set(g2.red_bearing()))


def simplify_pair(g1: GSLO, g2: GSLO,
                  trace1: Optional[List[str]] = None,
                  trace2: Optional[List[str]] = None) -> Tuple[GSLO, GSLO]:
    """Relocate unpaired red operators until the pair is simplified.

    For a violation (p, q) adjacent in g1 the red operator of g1 moves from p to q;
    otherwise the red operator of g2 moves from q to p. Either way both toy bits
    stop being unpaired.
    """
    assert g1.n == g2.n, "Expected diagrams on the same number of toy bits."
    assert g1.is_reduced() and g2.is_reduced(), "Expected two diagrams in rGS-LO form."
    for _ in range(g1.n ** 2 + 1):
        violation = find_violation(g1, g2)
        if violation is None:
            return g1, g2
        p, q = violation
        if g1.adjacent(p, q):
            g1 = move_red(g1, p, q, trace1)
        else:
            g2 = move_red(g2, q, p, trace2)
    logger.warning("Pair simplification hit its step cap of %s passes.", g1.n ** 2 + 1)
    raise RuntimeError("Pair simplification did not terminate.")
