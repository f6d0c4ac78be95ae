import os
from typing import Optional
from ..Diagram import Diagram
from .load_from_json import load_from_json
from .load_from_toy import load_from_toy


def load_diagram(file: str, ftype: Optional[str] = None) -> Diagram:
    """Load a diagram, choosing the reader by file extension.

    Args:
    -----
    file:
        Path to a ".toy" (text) or ".json" (tree) file.
    ftype:
        Optional. File type ("toy", "text", "json" or "tree"), overrides the extension.
    """
    assert os.path.exists(file), f"The specified file: {file} does not exists"

    if ftype is None:
        ftype = os.path.splitext(file)[1].lower()[1:]
    else:
        ftype = ftype.lower()

    if ftype in ("toy", "text"):
        return load_from_toy(file)
    if ftype in ("json", "tree"):
        return load_from_json(file)

    raise TypeError(f"File extension of file: {file} is not recognized")
