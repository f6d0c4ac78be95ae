import json
from ..Diagram import Diagram, Node
from ..diagram_operations import assert_valid
from ..Phase import Phase


def diagram_from_dict(dct: dict) -> Diagram:
    """Convert the tree form ``{"inputs", "outputs", "nodes", "edges"}`` into a Diagram."""
    for key in ("nodes", "edges"):
        if key not in dct:
            raise ValueError(f"Diagram object lacks the key {key!r}.")
    nodes = {}
    for entry in dct["nodes"]:
        phase = entry.get("phase")
        nodes[str(entry["id"])] = Node(entry["kind"], None if phase is None else Phase.from_string(phase))
    edges = [(str(a), str(b)) for a, b in dct["edges"]]
    diagram = Diagram(nodes, edges, int(dct.get("inputs", 0)), int(dct.get("outputs", 0)))
    assert_valid(diagram)
    return diagram


def load_from_json(filename: str) -> Diagram:
    """Load a diagram from its tree serialisation.

    .. code-block:: python

        from toybits.importing import load_from_json

        diagram = load_from_json("state01.json")

    """
    with open(filename, "rb") as fin:
        return diagram_from_dict(json.load(fin))
