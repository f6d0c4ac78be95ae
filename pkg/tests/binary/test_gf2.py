import numpy as np
import pytest
from toybits.binary import (column_space_basis, column_span_equal, gf2_inverse,
                            gf2_rank, row_reduce, solve_affine)


def test_row_reduce():
    matrix = np.array([[1, 1, 0],
                       [1, 1, 1],
                       [0, 0, 1]], dtype=np.uint8)
    reduced, pivots = row_reduce(matrix)
    expected = np.array([[1, 1, 0],
                         [0, 0, 1],
                         [0, 0, 0]], dtype=np.uint8)
    assert np.array_equal(reduced, expected), "Expected different reduced row echelon form."
    assert pivots.tolist() == [0, 2]
    assert matrix[1, 2] == 1, "Expected the input matrix to be left untouched."


@pytest.mark.parametrize("matrix, expected_rank", [
    [np.zeros((3, 3), dtype=np.uint8), 0],
    [np.eye(4, dtype=np.uint8), 4],
    [np.ones((3, 5), dtype=np.uint8), 1],
    [np.array([[1, 0, 1], [0, 1, 1], [1, 1, 0]]), 2],
])
def test_gf2_rank(matrix, expected_rank):
    assert gf2_rank(matrix) == expected_rank


def test_gf2_inverse():
    matrix = np.array([[1, 1, 0],
                       [0, 1, 1],
                       [0, 0, 1]], dtype=np.uint8)
    inverse = gf2_inverse(matrix)
    assert np.array_equal((matrix @ inverse) % 2, np.eye(3, dtype=np.uint8))


def test_gf2_inverse_singular():
    with pytest.raises(ValueError) as msg:
        gf2_inverse(np.array([[1, 1], [1, 1]]))
    assert "singular" in str(msg.value)


def test_column_span_equal():
    first = np.array([[1, 0], [0, 1], [1, 1]])
    second = np.array([[1, 1], [1, 0], [0, 1]])
    assert column_span_equal(first, second), "Expected equal column spans."
    assert not column_span_equal(first, np.array([[1], [0], [0]]))
    assert column_space_basis(np.array([[1, 1], [1, 1]])).shape == (2, 1)


def test_float_and_negative_entries_are_reduced_mod_two():
    assert gf2_rank(np.array([[2.0, 1.0], [0.0, 3.0]])) == 2
    assert gf2_rank(np.array([[-1, 1], [1, -1]])) == 1


def test_solve_affine():
    matrix = np.array([[1, 1, 0, 0],
                       [0, 1, 1, 0],
                       [0, 0, 0, 1]], dtype=np.uint8)
    rhs = np.array([1, 0, 1], dtype=np.uint8)
    particular, kernel = solve_affine(matrix, rhs)
    assert np.array_equal((matrix @ particular) % 2, rhs), "Expected a solution of the system."
    assert kernel.shape == (4, 1)
    assert not ((matrix @ kernel) % 2).any(), "Expected the kernel to solve the homogeneous system."


def test_solve_affine_inconsistent():
    assert solve_affine(np.array([[1, 1], [1, 1]]), np.array([0, 1])) is None
    assert solve_affine(np.zeros((1, 2)), np.array([1])) is None


def test_solve_affine_without_equations():
    particular, kernel = solve_affine(np.zeros((0, 3), dtype=np.uint8), np.zeros(0, dtype=np.uint8))
    assert not particular.any()
    assert np.array_equal(kernel, np.eye(3))
