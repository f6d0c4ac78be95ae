"""Structural operations on diagrams: validation, isomorphism and composition."""
import logging
from collections import Counter
from typing import Dict, Iterable, List, Set
import networkx as nx
from networkx.algorithms.isomorphism import categorical_node_match
from .constants import GREEN, HADAMARD
from .Diagram import Diagram, Node, is_boundary
from .DiagramEditor import DiagramEditor
from .hashing import topology_hash


logger = logging.getLogger("toybits")


def validate(diagram: Diagram) -> List[str]:
    """Return the list of structural errors of a diagram; an empty list means valid."""
    errors = []
    boundary = set(diagram.boundary)
    nodes = diagram.nodes
    end_counts = Counter()
    for index, (a, b) in enumerate(diagram.edges):
        for endpoint in (a, b):
            end_counts[endpoint] += 1
            if endpoint not in nodes and endpoint not in boundary:
                errors.append(f"edge {index} ({a}, {b}): unknown endpoint {endpoint}")
    for endpoint in diagram.boundary:
        if end_counts[endpoint] != 1:
            errors.append(f"boundary {endpoint}: attached to {end_counts[endpoint]} edge ends, expected 1")
    for node_id, node in sorted(nodes.items()):
        if node.kind == HADAMARD and end_counts[node_id] != 2:
            errors.append(f"node {node_id}: H degree {end_counts[node_id]}, expected 2")
    return errors


def assert_valid(diagram: Diagram):
    """Raise ValueError listing every structural error of the diagram."""
    errors = validate(diagram)
    if errors:
        raise ValueError("Invalid diagram: " + "; ".join(errors))


def iso_equal(first: Diagram, second: Diagram) -> bool:
    """True iff the diagrams are equal up to renaming of their nodes.

    The bijection must keep node kinds and phases, edge multiplicities (self-loops
    included) and the order of the boundary.
    """
    if (first.n_inputs, first.n_outputs) != (second.n_inputs, second.n_outputs):
        return False
    if len(first.nodes) != len(second.nodes) or len(first.edges) != len(second.edges):
        return False
    if topology_hash(first) != topology_hash(second):
        return False
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx(),
                            node_match=categorical_node_match("label", None))


def renumbered(diagram: Diagram, start: int = 0, prefix: str = "n") -> Diagram:
    """Copy of the diagram with nodes renamed ``n{start}, n{start+1}, ...`` in sorted order."""
    mapping = {node_id: f"{prefix}{start + k}" for k, node_id in enumerate(sorted(diagram.nodes))}
    return relabel(diagram, mapping)


def relabel(diagram: Diagram, mapping: Dict[str, str]) -> Diagram:
    """Rename nodes and boundary endpoints; endpoints missing from the mapping keep their name."""
    nodes = {mapping.get(node_id, node_id): node for node_id, node in diagram.nodes.items()}
    edges = [(mapping.get(a, a), mapping.get(b, b)) for a, b in diagram.edges]
    n_inputs = sum(1 for endpoint in diagram.boundary if mapping.get(endpoint, endpoint).startswith("in"))
    n_outputs = diagram.n_inputs + diagram.n_outputs - n_inputs
    return Diagram(nodes, edges, n_inputs, n_outputs)


def par(first: Diagram, second: Diagram) -> Diagram:
    """Place two diagrams side by side; the boundary of ``second`` follows that of ``first``."""
    left = renumbered(first)
    right = renumbered(second, start=len(first.nodes))
    shift = {f"in{k}": f"in{k + first.n_inputs}" for k in range(second.n_inputs)}
    shift.update({f"out{k}": f"out{k + first.n_outputs}" for k in range(second.n_outputs)})
    right = relabel(right, shift)
    return Diagram({**left.nodes, **right.nodes}, left.edges + right.edges,
                   first.n_inputs + second.n_inputs, first.n_outputs + second.n_outputs)


def seq(first: Diagram, second: Diagram) -> Diagram:
    """Connect the outputs of ``first`` to the inputs of ``second``.

    A closed wire loop created by the gluing becomes a phase-00 green node with a self-loop.
    """
    assert first.n_outputs == second.n_inputs, \
        f"Cannot compose a diagram with {first.n_outputs} outputs " \
        f"with a diagram with {second.n_inputs} inputs."
    n_glue = first.n_outputs
    glue = [f"glue{k}" for k in range(n_glue)]
    left = relabel(renumbered(first), {f"out{k}": glue[k] for k in range(n_glue)})
    right = relabel(renumbered(second, start=len(first.nodes)),
                    {f"in{k}": glue[k] for k in range(n_glue)})
    editor = DiagramEditor(Diagram({}, (), first.n_inputs, second.n_outputs))
    editor.nodes = {**left.nodes, **right.nodes}
    editor.edges = left.edges + right.edges
    for point in glue:
        ends = editor.incident(point)
        if len(ends) == 2 and ends[0][0] == ends[1][0]:
            editor.edges.pop(ends[0][0])
            loop = editor.add_node(Node(GREEN))
            editor.add_edge(loop, loop)
            continue
        assert len(ends) == 2, f"Glue point {point} has {len(ends)} edge ends."
        (first_index, a), (second_index, b) = ends
        for index in sorted((first_index, second_index), reverse=True):
            editor.edges.pop(index)
        editor.add_edge(a, b)
    return renumbered(editor.to_diagram())


def dagger(diagram: Diagram) -> Diagram:
    """Flip a diagram upside down: inputs and outputs swap, phases stay."""
    mapping = {f"in{k}": f"out{k}" for k in range(diagram.n_inputs)}
    mapping.update({f"out{k}": f"in{k}" for k in range(diagram.n_outputs)})
    return relabel(diagram, mapping)


def bend(diagram: Diagram) -> Diagram:
    """Bend every input around into an output.

    Input ``k`` becomes output ``k`` and output ``j`` becomes output ``n_inputs + j``.
    """
    n = diagram.n_inputs
    mapping = {f"in{k}": f"out{k}" for k in range(n)}
    mapping.update({f"out{j}": f"out{n + j}" for j in range(diagram.n_outputs)})
    return relabel(diagram, mapping)


def unbend(diagram: Diagram, n_inputs: int) -> Diagram:
    """Inverse of :func:`bend`: the first ``n_inputs`` outputs become inputs."""
    assert diagram.n_inputs == 0, "Only state diagrams can be unbent."
    assert 0 <= n_inputs <= diagram.n_outputs, \
        f"Cannot turn {n_inputs} of {diagram.n_outputs} outputs into inputs."
    mapping = {f"out{k}": f"in{k}" for k in range(n_inputs)}
    mapping.update({f"out{j}": f"out{j - n_inputs}" for j in range(n_inputs, diagram.n_outputs)})
    return relabel(diagram, mapping)


def components(diagram: Diagram) -> List[Set[str]]:
    """Connected components as sets of node ids and boundary endpoints, in a fixed order."""
    found = nx.connected_components(diagram.to_networkx())
    return sorted((set(component) for component in found), key=lambda c: sorted(c)[0])


def subdiagram(diagram: Diagram, endpoints: Iterable[str]) -> Diagram:
    """The closed part of a diagram spanned by a set of nodes without boundary endpoints."""
    endpoints = set(endpoints)
    assert not any(is_boundary(endpoint) for endpoint in endpoints), \
        "A subdiagram cannot contain boundary endpoints."
    nodes = {node_id: node for node_id, node in diagram.nodes.items() if node_id in endpoints}
    edges = [(a, b) for a, b in diagram.edges if a in endpoints and b in endpoints]
    return Diagram(nodes, edges)


def remove_nodes(diagram: Diagram, endpoints: Iterable[str]) -> Diagram:
    """Drop a set of boundary-free nodes together with their edges."""
    endpoints = set(endpoints)
    nodes = {node_id: node for node_id, node in diagram.nodes.items() if node_id not in endpoints}
    edges = [(a, b) for a, b in diagram.edges if a not in endpoints and b not in endpoints]
    return Diagram(nodes, edges, diagram.n_inputs, diagram.n_outputs)
