import json
from ..Diagram import Diagram


def diagram_to_dict(diagram: Diagram) -> dict:
    nodes = []
    for node_id, node in sorted(diagram.nodes.items()):
        entry = {"id": node_id, "kind": node.kind}
        if node.is_spider:
            entry["phase"] = str(node.phase)
        nodes.append(entry)
    return {"inputs": diagram.n_inputs,
            "outputs": diagram.n_outputs,
            "nodes": nodes,
            "edges": [list(edge) for edge in diagram.edges]}


def save_as_json(diagram: Diagram, filename: str):
    """Save a diagram in its tree serialisation.

    .. code-block:: python

        from toybits.exporting import save_as_json
        from toybits.generators import state

        save_as_json(state("Z", "01"), "state01.json")

    """
    with open(filename, "w", encoding="utf-8") as fout:
        json.dump(diagram_to_dict(diagram), fout, indent=2)
