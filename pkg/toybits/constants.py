ONTIC_STATES = (1, 2, 3, 4)

GREEN = "Z"
RED = "X"
HADAMARD = "H"
COLOURS = (GREEN, RED)
NODE_KINDS = (GREEN, RED, HADAMARD)

# Two-element epistemic state of a graph-state vertex before any local operator.
GRAPH_VERTEX_STATE = frozenset({1, 3})
