"""Exact relational semantics of diagrams.

Every edge is a wire variable ranging over the ontic states 1..4 and every node
constrains the wires at its legs. The relation of a diagram is obtained by
joining these constraints and projecting onto the boundary wires.
"""
from itertools import product as cartesian_product
from typing import Dict, FrozenSet, List, Sequence, Tuple
from .constants import GREEN, HADAMARD
from .Diagram import Diagram, Node
from .diagram_operations import assert_valid
from .Relation import Relation
from .utils import bits_to_ontic


Factor = Tuple[Tuple[int, ...], FrozenSet[Tuple[int, ...]]]

HADAMARD_IMAGE = {1: 1, 2: 3, 3: 2, 4: 4}


def spider_assignments(node: Node, degree: int) -> List[Tuple[int, ...]]:
    """Ontic values allowed on the legs of a spider, in leg order."""
    allowed = []
    for common in (0, 1):
        parity = node.phase.parity(common)
        for free_bits in cartesian_product((0, 1), repeat=max(degree - 1, 0)):
            if degree == 0:
                if parity == 0:
                    allowed.append(())
                continue
            last = parity
            for bit in free_bits:
                last ^= bit
            bits = free_bits + (last,)
            if node.kind == GREEN:
                allowed.append(tuple(bits_to_ontic(common, bit) for bit in bits))
            else:
                allowed.append(tuple(bits_to_ontic(bit, common) for bit in bits))
    return allowed


def node_assignments(node: Node, degree: int) -> List[Tuple[int, ...]]:
    if node.kind == HADAMARD:
        assert degree == 2, "H nodes need exactly two legs."
        return [(s, HADAMARD_IMAGE[s]) for s in (1, 2, 3, 4)]
    return spider_assignments(node, degree)


def _node_factor(node: Node, legs: Sequence[int]) -> Factor:
    variables = tuple(dict.fromkeys(legs))
    rows = set()
    for assignment in node_assignments(node, len(legs)):
        values: Dict[int, int] = {}
        consistent = True
        for leg, value in zip(legs, assignment):
            if values.setdefault(leg, value) != value:
                consistent = False
                break
        if consistent:
            rows.add(tuple(values[variable] for variable in variables))
    return variables, frozenset(rows)


def _join(first: Factor, second: Factor) -> Factor:
    first_vars, first_rows = first
    second_vars, second_rows = second
    shared = [v for v in second_vars if v in first_vars]
    extra = [k for k, v in enumerate(second_vars) if v not in first_vars]
    first_key = [first_vars.index(v) for v in shared]
    second_key = [second_vars.index(v) for v in shared]
    index = {}
    for row in second_rows:
        index.setdefault(tuple(row[k] for k in second_key), []).append(tuple(row[k] for k in extra))
    rows = set()
    for row in first_rows:
        for tail in index.get(tuple(row[k] for k in first_key), ()):
            rows.add(row + tail)
    return first_vars + tuple(second_vars[k] for k in extra), frozenset(rows)


def _project(factor: Factor, keep) -> Factor:
    variables, rows = factor
    positions = [k for k, v in enumerate(variables) if v in keep]
    return tuple(variables[k] for k in positions), frozenset(tuple(row[k] for k in positions) for row in rows)


def interpret(diagram: Diagram) -> Relation:
    """Relation denoted by a diagram.

    A pair (input values, output values) belongs to the relation iff every wire can be
    given an ontic state such that all node constraints hold.
    """
    assert_valid(diagram)
    edges = diagram.edges
    legs = {node_id: [] for node_id in diagram.nodes}
    for index, (a, b) in enumerate(edges):
        for endpoint in (a, b):
            if endpoint in legs:
                legs[endpoint].append(index)
    factors = [_node_factor(node, legs[node_id]) for node_id, node in sorted(diagram.nodes.items())]
    touched = {index for leg_list in legs.values() for index in leg_list}
    for index in range(len(edges)):
        if index not in touched:
            factors.append(((index,), frozenset((s,) for s in (1, 2, 3, 4))))

    slot_edge = {}
    for index, (a, b) in enumerate(edges):
        for endpoint in (a, b):
            if endpoint not in diagram.nodes:
                slot_edge[endpoint] = index
    input_vars = [slot_edge[endpoint] for endpoint in diagram.inputs]
    output_vars = [slot_edge[endpoint] for endpoint in diagram.outputs]
    boundary_vars = set(input_vars + output_vars)

    result: Factor = ((), frozenset({()}))
    remaining = list(factors)
    while remaining:
        best = max(range(len(remaining)),
                   key=lambda k: (len(set(remaining[k][0]) & set(result[0])), -k))
        result = _join(result, remaining.pop(best))
        if not result[1]:
            return Relation(diagram.n_inputs, diagram.n_outputs)
        still_needed = boundary_vars.union(*(set(f[0]) for f in remaining))
        result = _project(result, still_needed)

    variables = result[0]
    pairs = set()
    for row in result[1]:
        value = dict(zip(variables, row))
        pairs.add((tuple(value[v] for v in input_vars), tuple(value[v] for v in output_vars)))
    return Relation(diagram.n_inputs, diagram.n_outputs, pairs)
