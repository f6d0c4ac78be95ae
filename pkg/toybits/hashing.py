"""Helper functions related to hashing.
"""
import hashlib
import json
import networkx as nx
from .Diagram import Diagram


def diagram_hash(diagram: Diagram, hash_length: int = 20):
    """Compute hash from the exact content of a diagram, node identifiers included.

    Two diagrams with the same hash are equal as values; used to recognise stale matches.
    """
    content = {
        "nodes": sorted((node_id, node.label) for node_id, node in diagram.nodes.items()),
        "edges": diagram.edges,
        "boundary": [diagram.n_inputs, diagram.n_outputs],
    }
    encoded = json.dumps(content, sort_keys=True).encode()
    return hashlib.sha256(encoded).hexdigest()[:hash_length]


def topology_hash(diagram: Diagram, hash_length: int = 20, iterations: int = 3):
    """Compute hash that ignores node identifiers.

    Isomorphic diagrams always share this hash, so differing hashes rule out isomorphism.
    """
    graph = nx.Graph()
    for node_id, node in diagram.nodes.items():
        graph.add_node(node_id, label=node.label)
    for endpoint in diagram.boundary:
        graph.add_node(endpoint, label=endpoint)
    for (a, b), count in diagram.edge_multiplicities().items():
        if a == b:
            graph.nodes[a]["label"] += f"+loop{count}"
        else:
            graph.add_edge(a, b, label=str(count))
    wl_hash = nx.weisfeiler_lehman_graph_hash(graph, edge_attr="label", node_attr="label",
                                              iterations=iterations)
    encoded = f"{diagram.n_inputs}:{diagram.n_outputs}:{wl_hash}".encode("utf-8")
    return hashlib.sha256(encoded).hexdigest()[:hash_length]
