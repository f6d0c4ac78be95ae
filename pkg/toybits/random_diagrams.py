"""Seeded generators of valid random diagrams and graph states for sweeps and tests."""
from typing import List
import numpy as np
from .constants import GREEN, HADAMARD, RED
from .Diagram import Diagram, Node
from .LocalOp import all_local_ops
from .normalform.GSLO import GSLO
from .Phase import ALL_PHASES


def _random_node(rng: np.random.Generator, hadamard_rate: float) -> Node:
    if rng.random() < hadamard_rate:
        return Node(HADAMARD)
    colour = GREEN if rng.random() < 0.5 else RED
    return Node(colour, ALL_PHASES[rng.integers(len(ALL_PHASES))])


def random_diagram(rng: np.random.Generator, max_outputs: int = 3, max_nodes: int = 8,
                   n_inputs: int = 0, hadamard_rate: float = 0.25) -> Diagram:
    """A random valid diagram with ``n_inputs`` inputs and 1 to ``max_outputs`` outputs.

    Every boundary slot and both ends of every H node are attached to a random
    spider; a few further spider-spider edges, occasionally self-loops, are added.

    Parameters
    ----------
    rng:
        Numpy random generator, e.g. ``np.random.default_rng(42)``.
    max_outputs:
        Largest number of outputs.
    max_nodes:
        Largest number of nodes. At least one node is always a spider.
    n_inputs:
        Number of inputs.
    hadamard_rate:
        Probability that a node is an H node.
    """
    assert max_outputs >= 1 and max_nodes >= 1, "Expected at least one output and one node."
    n_outputs = int(rng.integers(1, max_outputs + 1))
    n_nodes = int(rng.integers(1, max_nodes + 1))
    nodes = {"n0": _random_node(rng, 0)}
    for k in range(1, n_nodes):
        nodes[f"n{k}"] = _random_node(rng, hadamard_rate)
    spiders = [node_id for node_id, node in nodes.items() if node.is_spider]
    hadamards = [node_id for node_id, node in nodes.items() if not node.is_spider]

    def any_spider() -> str:
        return spiders[rng.integers(len(spiders))]

    ends = [f"in{k}" for k in range(n_inputs)] + [f"out{k}" for k in range(n_outputs)]
    ends += [h for h in hadamards for _ in range(2)]
    edges = [(end, any_spider()) for end in ends]
    for _ in range(int(rng.integers(0, len(spiders) + 1))):
        edges.append((any_spider(), any_spider()))
    return Diagram(nodes, edges, n_inputs, n_outputs)


def random_state_diagram(rng: np.random.Generator, max_outputs: int = 3, max_nodes: int = 8) -> Diagram:
    """A random diagram without inputs."""
    return random_diagram(rng, max_outputs, max_nodes, n_inputs=0)


def random_adjacency(rng: np.random.Generator, n: int, edge_rate: float = 0.5) -> np.ndarray:
    """Symmetric 0/1 matrix with zero diagonal."""
    upper = np.triu((rng.random((n, n)) < edge_rate).astype(np.uint8), k=1)
    return upper + upper.T


def random_gslo(rng: np.random.Generator, n: int, edge_rate: float = 0.5) -> GSLO:
    """A random graph with a uniformly chosen local operator on every vertex."""
    operators = all_local_ops()
    ops: List = [operators[rng.integers(len(operators))] for _ in range(n)]
    return GSLO(random_adjacency(rng, n, edge_rate), ops)
