#!/usr/bin/env python3
#
# matrix_utils.py
#
# Provides helpers for coercing, validating and measuring dense matrices, and
# for applying plane rotations in place
#
# MIT License - see LICENSE
import numpy as np

from ..linalg_exception import DomainException, UsageException

# Relative asymmetry accepted when a matrix is taken as symmetric
SYMMETRY_TOL = 1e-12


# Coerces a value to a finite float64 matrix, optionally requiring it to be
# square
def as_matrix(value, square: bool = True, name: str = "matrix") -> np.ndarray:
    try:
        matrix = np.array(value, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise UsageException(f"Could not interpret {name} as a real matrix: {e}")
    if matrix.ndim != 2 or matrix.size == 0:
        raise UsageException(f"{name} must be a non-empty 2-D array, got {matrix.shape}")
    if square and matrix.shape[0] != matrix.shape[1]:
        raise UsageException(f"{name} must be square, got {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise DomainException(f"{name} has non-finite entries")
    return matrix


# Coerces a value to a matrix of the given order
def as_matrix_of_order(value, order: int, name: str = "matrix") -> np.ndarray:
    matrix = as_matrix(value, name=name)
    if matrix.shape[0] != order:
        raise UsageException(f"{name} must be {order}x{order}, got {matrix.shape}")
    return matrix


# Coerces a value to a symmetric matrix, rejecting asymmetry beyond
# SYMMETRY_TOL * max(1, |A|_inf) and averaging away what is left
def as_symmetric(value, name: str = "matrix") -> np.ndarray:
    matrix = as_matrix(value, name=name)
    asymmetry = max_abs(matrix - matrix.T)
    if asymmetry > SYMMETRY_TOL * max(1.0, max_abs(matrix)):
        raise DomainException(f"{name} is not symmetric (asymmetry {asymmetry:.3e})")
    return (matrix + matrix.T) / 2


# Coerces a value to a finite vector, optionally of a fixed length
def as_vector(value, length: int | None = None, name: str = "vector") -> np.ndarray:
    try:
        vector = np.array(value, dtype=np.float64).reshape(-1)
    except (TypeError, ValueError) as e:
        raise UsageException(f"Could not interpret {name} as a real vector: {e}")
    if length is not None and vector.shape[0] != length:
        raise UsageException(f"{name} must have {length} components, got {vector.shape[0]}")
    if not np.all(np.isfinite(vector)):
        raise DomainException(f"{name} has non-finite components")
    return vector


# Largest absolute entry, the |A|_inf used for relative tolerances
def max_abs(matrix: np.ndarray) -> float:
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


# Largest absolute entry of M^T M - I
def orthogonality_deviation(matrix: np.ndarray) -> float:
    return max_abs(matrix.T @ matrix - np.eye(matrix.shape[1]))


# Pre-multiplies matrix in place by the plane rotation that is the identity
# except for the (i, j) block [[c, s], [-s, c]], touching only rows i and j
def rotate_rows(matrix: np.ndarray, i: int, j: int, c: float, s: float) -> None:
    row_i = matrix[i, :].copy()
    row_j = matrix[j, :].copy()
    matrix[i, :] = c * row_i + s * row_j
    matrix[j, :] = -s * row_i + c * row_j


# Post-multiplies matrix in place by the same plane rotation, touching only
# columns i and j
def rotate_columns(matrix: np.ndarray, i: int, j: int, c: float, s: float) -> None:
    col_i = matrix[:, i].copy()
    col_j = matrix[:, j].copy()
    matrix[:, i] = c * col_i - s * col_j
    matrix[:, j] = s * col_i + c * col_j


def check_plane(order: int, i: int, j: int) -> None:
    if i == j:
        raise UsageException(f"Plane indices must differ, got ({i}, {j})")
    if not (0 <= i < order and 0 <= j < order):
        raise UsageException(f"Plane ({i}, {j}) out of range for order {order}")
