import numpy as np
from .gf2 import as_gf2


def is_adjacency_matrix(theta) -> bool:
    """Symmetric 0/1 matrix with zero diagonal."""
    theta = np.asarray(theta)
    return theta.ndim == 2 and theta.shape[0] == theta.shape[1] \
        and np.isin(theta, (0, 1)).all() \
        and np.array_equal(theta, theta.T) and not theta.diagonal().any()


def local_complement_adj(theta, v: int) -> np.ndarray:
    """Toggle every edge between two neighbours of ``v``."""
    theta = as_gf2(theta)
    assert is_adjacency_matrix(theta), "Expected a symmetric 0/1 matrix with zero diagonal."
    assert 0 <= v < theta.shape[0], f"Vertex {v} out of range for {theta.shape[0]} vertices."
    neighbours = theta[v].copy()
    toggled = theta ^ np.outer(neighbours, neighbours).astype(np.uint8)
    np.fill_diagonal(toggled, 0)
    return toggled


def pivot_adj(theta, v: int, w: int) -> np.ndarray:
    """Local complementation along the edge {v, w}: complement about v, w, then v."""
    theta = as_gf2(theta)
    assert theta[v, w] == 1, f"Vertices {v} and {w} are not adjacent."
    return local_complement_adj(local_complement_adj(local_complement_adj(theta, v), w), v)
