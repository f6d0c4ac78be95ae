from ..Diagram import Diagram


def diagram_to_text(diagram: Diagram) -> str:
    """Write a diagram in the line-oriented text format, nodes sorted by id."""
    lines = [f"inputs {diagram.n_inputs}", f"outputs {diagram.n_outputs}"]
    for node_id, node in sorted(diagram.nodes.items()):
        if node.is_spider:
            lines.append(f"node {node_id} {node.kind} {node.phase}")
        else:
            lines.append(f"node {node_id} {node.kind}")
    lines.extend(f"edge {a} {b}" for a, b in diagram.edges)
    return "\n".join(lines) + "\n"


def save_as_toy(diagram: Diagram, filename: str):
    """Save a diagram as a ``.toy`` text file."""
    with open(filename, "w", encoding="utf-8") as fout:
        fout.write(diagram_to_text(diagram))
