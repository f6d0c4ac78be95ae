import numpy as np


def adjacency_from_text(text: str) -> np.ndarray:
    """Parse rows of space-separated 0/1 entries into a uint8 adjacency matrix."""
    rows = []
    for line in text.splitlines():
        content = line.split("#", 1)[0].split()
        if content:
            rows.append([int(entry) for entry in content])
    if not rows:
        return np.zeros((0, 0), dtype=np.uint8)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError(f"Expected a square matrix with {n} entries per row.")
    theta = np.array(rows, dtype=np.uint8)
    if not np.isin(theta, (0, 1)).all():
        raise ValueError("Adjacency entries must be 0 or 1.")
    return theta


def load_adjacency(filename: str) -> np.ndarray:
    """Load an adjacency matrix written as rows of space-separated bits."""
    with open(filename, "r", encoding="utf-8") as fin:
        return adjacency_from_text(fin.read())
