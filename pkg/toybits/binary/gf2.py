"""Linear algebra over GF(2) on numpy uint8 arrays."""
from typing import Optional, Tuple
import numpy as np


def as_gf2(matrix) -> np.ndarray:
    return (np.asarray(matrix) % 2).astype(np.uint8)


def row_reduce(matrix) -> Tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form over GF(2) and the pivot columns."""
    reduced = as_gf2(matrix).copy()
    n_rows, n_cols = reduced.shape
    pivots = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        candidates = np.where(reduced[row:, col] == 1)[0]
        if candidates.size == 0:
            continue
        pivot_row = row + int(candidates[0])
        if pivot_row != row:
            reduced[[row, pivot_row], :] = reduced[[pivot_row, row], :]
        ones = np.where(reduced[:, col] == 1)[0]
        ones = ones[ones != row]
        if ones.size:
            reduced[ones, :] ^= reduced[row, :]
        pivots.append(col)
        row += 1
    return reduced, np.array(pivots, dtype=int)


def gf2_rank(matrix) -> int:
    return len(row_reduce(matrix)[1])


def column_space_basis(matrix) -> np.ndarray:
    """Canonical basis of the column span: the non-zero rows of RREF(matrix^T), as columns."""
    reduced, pivots = row_reduce(as_gf2(matrix).T)
    return reduced[:len(pivots)].T


def column_span_equal(first, second) -> bool:
    """True iff two matrices with the same number of rows span the same GF(2) column space."""
    first, second = as_gf2(first), as_gf2(second)
    assert first.shape[0] == second.shape[0], "Expected matrices with the same number of rows."
    return np.array_equal(column_space_basis(first), column_space_basis(second))


def gf2_inverse(matrix) -> np.ndarray:
    """Inverse of a square GF(2) matrix; raises ValueError if it is singular."""
    square = as_gf2(matrix)
    n = square.shape[0]
    assert square.shape == (n, n), "Expected a square matrix."
    reduced, pivots = row_reduce(np.concatenate([square, np.eye(n, dtype=np.uint8)], axis=1))
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ValueError("Matrix is singular over GF(2).")
    return reduced[:, n:]


def solve_affine(matrix, rhs) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """All solutions x of matrix @ x = rhs over GF(2).

    Returns a particular solution and a kernel basis (one column per free variable),
    or None if the system is inconsistent.

    .. testcode::

        from toybits.binary import solve_affine

        particular, kernel = solve_affine([[1, 1, 0], [0, 1, 1]], [1, 0])
        print(particular, kernel.T)

    Should output

    .. testoutput::

        [1 0 0] [[1 1 1]]

    """
    matrix = as_gf2(matrix)
    n_cols = matrix.shape[1]
    rhs = as_gf2(rhs).reshape(-1, 1)
    assert rhs.shape[0] == matrix.shape[0], "Expected one right-hand side entry per row."
    reduced, pivots = row_reduce(np.concatenate([matrix, rhs], axis=1))
    if len(pivots) and pivots[-1] == n_cols:
        return None
    rank = len(pivots)
    particular = np.zeros(n_cols, dtype=np.uint8)
    particular[pivots] = reduced[:rank, n_cols]
    pivot_set = set(pivots.tolist())
    free = [col for col in range(n_cols) if col not in pivot_set]
    kernel = np.zeros((n_cols, len(free)), dtype=np.uint8)
    for k, col in enumerate(free):
        kernel[col, k] = 1
        kernel[pivots, k] = reduced[:rank, col]
    return particular, kernel
