"""
Binary formalism
################

Check matrices over GF(2), the symplectic validity conditions, graph-state
matrices and adjacency-level local complementation.
"""
from .check_matrix import (check_matrix_from_strings, extract_check_matrix,
                           graph_form, local_op_symplectic,
                           local_ops_transform, symplectic_form,
                           validate_state, validate_transform)
from .gf2 import (column_space_basis, column_span_equal, gf2_inverse, gf2_rank,
                  row_reduce, solve_affine)
from .graph_matrices import is_adjacency_matrix, local_complement_adj, pivot_adj


__all__ = [
    "check_matrix_from_strings",
    "column_space_basis",
    "column_span_equal",
    "extract_check_matrix",
    "gf2_inverse",
    "gf2_rank",
    "graph_form",
    "is_adjacency_matrix",
    "local_complement_adj",
    "local_op_symplectic",
    "local_ops_transform",
    "pivot_adj",
    "row_reduce",
    "solve_affine",
    "symplectic_form",
    "validate_state",
    "validate_transform",
]
