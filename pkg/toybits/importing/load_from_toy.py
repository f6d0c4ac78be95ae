import logging
from typing import Dict, List, Tuple
from ..Diagram import Diagram, Node, is_boundary
from ..Phase import Phase


logger = logging.getLogger("toybits")


class DiagramParseError(ValueError):
    """Raised for malformed diagram text, with the 1-based line and column of the problem."""
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text_line: str) -> List[Tuple[str, int]]:
    """Split a line into (token, column) pairs, dropping a trailing comment."""
    content = text_line.split("#", 1)[0]
    tokens = []
    column = 0
    while column < len(content):
        if content[column].isspace():
            column += 1
            continue
        start = column
        while column < len(content) and not content[column].isspace():
            column += 1
        tokens.append((content[start:column], start + 1))
    return tokens


def _count(tokens, line_number) -> int:
    if len(tokens) != 2 or not tokens[1][0].isdigit():
        raise DiagramParseError(f"expected '{tokens[0][0]} <count>'", line_number, tokens[0][1])
    return int(tokens[1][0])


def diagram_from_text(text: str) -> Diagram:
    """Parse the line-oriented diagram format.

    .. code-block:: text

        # green state with phase 01
        inputs 0
        outputs 1
        node a Z 01
        edge a out0

    Raises
    ------
    DiagramParseError
        For syntax errors, unknown endpoints and boundary slots that are not used exactly once.
    """
    counts = {"inputs": 0, "outputs": 0}
    header_line = {"inputs": 1, "outputs": 1}
    nodes: Dict[str, Node] = {}
    node_lines = {}
    edges = []
    edge_positions = []
    for line_number, text_line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(text_line)
        if not tokens:
            continue
        keyword, column = tokens[0]
        if keyword in counts:
            counts[keyword] = _count(tokens, line_number)
            header_line[keyword] = line_number
        elif keyword == "node":
            node_id, node = _parse_node(tokens, line_number, nodes)
            nodes[node_id] = node
            node_lines[node_id] = line_number
        elif keyword == "edge":
            if len(tokens) != 3:
                raise DiagramParseError("expected 'edge <a> <b>'", line_number, column)
            edges.append((tokens[1][0], tokens[2][0]))
            edge_positions.append((line_number, tokens[1][1], tokens[2][1]))
        else:
            raise DiagramParseError(f"unknown keyword {keyword!r}", line_number, column)

    boundary = [f"in{k}" for k in range(counts["inputs"])] + [f"out{k}" for k in range(counts["outputs"])]
    used = {}
    for (a, b), (line_number, column_a, column_b) in zip(edges, edge_positions):
        for endpoint, column in ((a, column_a), (b, column_b)):
            if endpoint in nodes:
                continue
            if endpoint not in boundary:
                raise DiagramParseError(f"unknown endpoint {endpoint!r}", line_number, column)
            if endpoint in used:
                raise DiagramParseError(f"boundary {endpoint} used more than once", line_number, column)
            used[endpoint] = line_number
    for endpoint in boundary:
        if endpoint not in used:
            side = "inputs" if endpoint.startswith("in") else "outputs"
            raise DiagramParseError(f"boundary {endpoint} is never attached", header_line[side])
    diagram = Diagram(nodes, edges, counts["inputs"], counts["outputs"])
    for node_id, node in nodes.items():
        if node.kind == "H" and diagram.degree(node_id) != 2:
            raise DiagramParseError(f"H node {node_id} has degree {diagram.degree(node_id)}, expected 2",
                                    node_lines[node_id])
    return diagram


def _parse_node(tokens, line_number, nodes) -> Tuple[str, Node]:
    if len(tokens) < 3:
        raise DiagramParseError("expected 'node <id> <kind> [<phase>]'", line_number, tokens[0][1])
    node_id, id_column = tokens[1]
    kind, kind_column = tokens[2]
    if is_boundary(node_id):
        raise DiagramParseError(f"node id {node_id!r} is reserved for the boundary", line_number, id_column)
    if node_id in nodes:
        raise DiagramParseError(f"duplicate node id {node_id!r}", line_number, id_column)
    if kind == "H":
        if len(tokens) != 3:
            raise DiagramParseError("H nodes take no phase", line_number, tokens[3][1])
        return node_id, Node("H")
    if kind not in ("Z", "X"):
        raise DiagramParseError(f"unknown node kind {kind!r}", line_number, kind_column)
    if len(tokens) != 4:
        raise DiagramParseError("expected a two-bit phase", line_number, kind_column)
    label, phase_column = tokens[3]
    if len(label) != 2 or not set(label) <= {"0", "1"}:
        raise DiagramParseError(f"invalid phase {label!r}", line_number, phase_column)
    return node_id, Node(kind, Phase.from_string(label))


def load_from_toy(filename: str) -> Diagram:
    """Load a diagram from a ``.toy`` text file."""
    with open(filename, "r", encoding="utf-8") as fin:
        diagram = diagram_from_text(fin.read())
    logger.info("Loaded diagram with %s nodes from %s", len(diagram.nodes), filename)
    return diagram
