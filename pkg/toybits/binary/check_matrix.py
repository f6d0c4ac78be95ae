"""Check matrices of maximal-knowledge states.

A check matrix of an n-toy-bit state is a 2n x n GF(2) matrix. Column c encodes a
quadrature variable known in the state: row k holds its Z component on toy bit k
and row k + n its X component (Z -> 10, X -> 01, X⊕Z -> 11). Only the GF(2)
structure is tracked; the values of the variables are not.
"""
from typing import Sequence
import numpy as np
from ..LocalOp import LocalOp
from .gf2 import as_gf2, gf2_inverse, gf2_rank
from .graph_matrices import is_adjacency_matrix


ENCODING = {"I": (0, 0), "Z": (1, 0), "X": (0, 1), "W": (1, 1)}


def symplectic_form(n: int) -> np.ndarray:
    """J = ((0, I), (I, 0)) of size 2n."""
    zeros = np.zeros((n, n), dtype=np.uint8)
    identity = np.eye(n, dtype=np.uint8)
    return np.block([[zeros, identity], [identity, zeros]])


def validate_state(check_matrix) -> bool:
    """True iff S^T J S = 0 and the columns are independent over GF(2)."""
    check_matrix = as_gf2(check_matrix)
    assert check_matrix.ndim == 2 and check_matrix.shape[0] == 2 * check_matrix.shape[1], \
        f"Expected a 2n x n matrix, got shape {check_matrix.shape}."
    n = check_matrix.shape[1]
    commutes = not ((check_matrix.T @ symplectic_form(n) @ check_matrix) % 2).any()
    return commutes and gf2_rank(check_matrix) == n


def validate_transform(transform) -> bool:
    """True iff Q^T J Q = J over GF(2)."""
    transform = as_gf2(transform)
    assert transform.ndim == 2 and transform.shape[0] == transform.shape[1] \
        and transform.shape[0] % 2 == 0, f"Expected a 2n x 2n matrix, got shape {transform.shape}."
    form = symplectic_form(transform.shape[0] // 2)
    return np.array_equal((transform.T @ form @ transform) % 2, form)


def graph_form(theta) -> np.ndarray:
    """Check matrix of a graph state: theta stacked over the identity."""
    theta = as_gf2(theta)
    assert is_adjacency_matrix(theta), "Expected a symmetric 0/1 matrix with zero diagonal."
    return np.vstack([theta, np.eye(theta.shape[0], dtype=np.uint8)])


def check_matrix_from_strings(columns: Sequence[str]) -> np.ndarray:
    """Build a check matrix from one string per column, e.g. ``["XX", "ZZ"]``.

    Letters are I, X, Z and W (for X⊕Z), one per toy bit.
    """
    assert columns, "Expected at least one column."
    n = len(columns[0])
    assert all(len(column) == n for column in columns), "All columns must cover the same toy bits."
    matrix = np.zeros((2 * n, len(columns)), dtype=np.uint8)
    for c, column in enumerate(columns):
        for k, letter in enumerate(column.upper()):
            if letter not in ENCODING:
                raise ValueError(f"Unknown quadrature letter {letter!r}.")
            matrix[k, c], matrix[k + n, c] = ENCODING[letter]
    return matrix


def local_op_symplectic(op: LocalOp) -> np.ndarray:
    """2 x 2 action of a single-toy-bit operator on (Z, X) components of a variable."""
    linear, _ = op.affine()
    return gf2_inverse(linear).T.copy()


def local_ops_transform(ops: Sequence[LocalOp]) -> np.ndarray:
    """2n x 2n transform applying one operator per toy bit."""
    n = len(ops)
    transform = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    for k, op in enumerate(ops):
        block = local_op_symplectic(op)
        for row, col in np.ndindex(2, 2):
            transform[k + row * n, k + col * n] = block[row, col]
    return transform


def extract_check_matrix(gslo) -> np.ndarray:
    """Check matrix of a graph state with local operators.

    The graph contributes theta over I; each operator then acts on the
    components of its toy bit.
    """
    return (local_ops_transform(gslo.ops) @ graph_form(gslo.theta)) % 2
