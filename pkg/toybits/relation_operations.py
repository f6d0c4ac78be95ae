from typing import List
from .Relation import Relation
from .typing import EpistemicState
from .utils import two_element_subsets


def compose(first: Relation, second: Relation) -> Relation:
    """Relational composition: first, then second."""
    assert first.arity_out == second.arity_in, \
        f"Cannot compose a relation with {first.arity_out} outputs " \
        f"with a relation with {second.arity_in} inputs."
    by_middle = {}
    for middle, right in second.pairs:
        by_middle.setdefault(middle, []).append(right)
    pairs = set()
    for left, middle in first.pairs:
        for right in by_middle.get(middle, ()):
            pairs.add((left, right))
    return Relation(first.arity_in, second.arity_out, pairs)


def product(left: Relation, right: Relation) -> Relation:
    """Cartesian product: the two relations side by side."""
    pairs = ((a + c, b + d) for a, b in left.pairs for c, d in right.pairs)
    return Relation(left.arity_in + right.arity_in, left.arity_out + right.arity_out, pairs)


def converse(relation: Relation) -> Relation:
    return Relation(relation.arity_out, relation.arity_in,
                    ((right, left) for left, right in relation.pairs))


def single_toybit_states() -> List[EpistemicState]:
    """The six maximal-knowledge states of a single toy bit."""
    return two_element_subsets()


def state_relations() -> List[Relation]:
    """The six maximal-knowledge states as single-output state relations."""
    return [Relation.state(((s,) for s in sorted(states)), 1) for states in single_toybit_states()]
