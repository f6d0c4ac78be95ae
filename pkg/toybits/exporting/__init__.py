"""
Functions for exporting diagrams
################################

Write diagrams as ``.toy`` text or as the ``.json`` tree serialisation.
"""
from .save_as_json import diagram_to_dict, save_as_json
from .save_as_toy import diagram_to_text, save_as_toy


__all__ = [
    "diagram_to_dict",
    "diagram_to_text",
    "save_as_json",
    "save_as_toy",
]
