"""
Functions for importing diagrams
################################

Diagrams are read from two formats: a line-oriented text format (``.toy``) and a
tree serialisation (``.json``). :func:`load_diagram` picks the reader from the
file extension. Adjacency matrices for graph states are read with
:func:`load_adjacency`.
"""
from .load_adjacency import adjacency_from_text, load_adjacency
from .load_diagram import load_diagram
from .load_from_json import diagram_from_dict, load_from_json
from .load_from_toy import DiagramParseError, diagram_from_text, load_from_toy


__all__ = [
    "adjacency_from_text",
    "DiagramParseError",
    "diagram_from_dict",
    "diagram_from_text",
    "load_adjacency",
    "load_diagram",
    "load_from_json",
    "load_from_toy",
]
