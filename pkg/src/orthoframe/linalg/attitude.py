#!/usr/bin/env python3
#
# attitude.py
#
# Provides Wahba-problem solvers and rotation <-> quaternion machinery: the
# Davenport K matrix, the two-measurement Bar-Itzhack K2, the Landis matrix,
# and the square-root-free rational orthogonalization of perturbed rotations
#
# Quaternions are scalar-first; the Bar-Itzhack vector-first ordering only
# appears when relating K2 to a Landis column
#
# MIT License - see LICENSE
from dataclasses import dataclass
from logging import getLogger

import numpy as np

from .linalg_exception import AmbiguityException, DomainException, UsageException
from .polar import polar_decompose
from .quat import Quaternion, normalize, phi_so3
from .spectral import jacobi_eigendecomposition
from .stiefel import parity, qr_givens
from .utils.matrix_utils import as_matrix, as_matrix_of_order, orthogonality_deviation

logger = getLogger(__name__)

# Orthogonality required of matrices converted to quaternions
ROTATION_TOL = 1e-6
# Reference/observation vectors must be unit to this tolerance
UNIT_VECTOR_TOL = 1e-9
# Two references are collinear when |dot| >= 1 - COLLINEAR_TOL
COLLINEAR_TOL = 1e-9
# Landis columns with norm-square below this are degenerate
DEGENERATE_TOL = 1e-8
# lambda_max of K is simple when it exceeds the runner-up by this much
# (relative to max(1, total weight))
EIGEN_GAP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class WahbaProblem:
    weights: np.ndarray
    references: np.ndarray
    observations: np.ndarray

    def __post_init__(self) -> None:
        weights = np.array(self.weights, dtype=np.float64).reshape(-1)
        references = as_matrix(self.references, square=False, name="references")
        observations = as_matrix(self.observations, square=False, name="observations")
        count = weights.shape[0]
        if count < 2:
            raise DomainException(f"A Wahba problem needs at least 2 pairs, got {count}")
        if references.shape != (count, 3) or observations.shape != (count, 3):
            raise UsageException(
                f"Expected {count} reference and observation 3-vectors, got {references.shape} and {observations.shape}"
            )
        if not np.all(np.isfinite(weights)) or np.any(weights <= 0.0):
            raise DomainException("Wahba weights must be positive and finite")
        for label, vectors in (("reference", references), ("observation", observations)):
            off_unit = np.abs(np.linalg.norm(vectors, axis=1) - 1.0)
            if np.any(off_unit > UNIT_VECTOR_TOL):
                idx = int(np.argmax(off_unit))
                raise DomainException(f"{label.capitalize()} vector {idx} is not a unit vector")
        dots = np.abs(references @ references.T)
        if not np.any(dots[np.triu_indices(count, 1)] < 1.0 - COLLINEAR_TOL):
            raise DomainException("Reference vectors are all collinear; attitude is undetermined")
        for name, value in (
            ("weights", weights),
            ("references", references),
            ("observations", observations),
        ):
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    # Builds a problem from (weight, reference, observation) triples
    @classmethod
    def from_pairs(cls, pairs) -> "WahbaProblem":
        pairs = list(pairs)
        return cls(
            [weight for weight, _, _ in pairs],
            [ref for _, ref, _ in pairs],
            [obs for _, _, obs in pairs],
        )

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.weights))

    def __len__(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True, eq=False)
class AttitudeProfile:
    B: np.ndarray
    K: np.ndarray


def landis(matrix) -> np.ndarray:
    s = as_matrix_of_order(matrix, 3, name="S")
    (s11, s12, s13), (s21, s22, s23), (s31, s32, s33) = s
    return np.array(
        [
            [1 + s11 + s22 + s33, s32 - s23, s13 - s31, s21 - s12],
            [s32 - s23, 1 + s11 - s22 - s33, s12 + s21, s13 + s31],
            [s13 - s31, s12 + s21, 1 - s11 + s22 - s33, s23 + s32],
            [s21 - s12, s13 + s31, s23 + s32, 1 - s11 - s22 + s33],
        ]
    )


# K2 depends only on the first two columns of S
def itzhak(matrix) -> np.ndarray:
    s = as_matrix_of_order(matrix, 3, name="S")
    d11, d21, d31 = s[:, 0]
    d12, d22, d32 = s[:, 1]
    return 0.5 * np.array(
        [
            [d11 - d22, d21 + d12, d31, -d32],
            [d21 + d12, d22 - d11, d32, d31],
            [d31, d32, -d11 - d22, d12 - d21],
            [-d32, d31, d12 - d21, d11 + d22],
        ]
    )


# 4 (1 + trace S), the norm-square of the first Landis column of a rotation
def landis_denominator(matrix) -> float:
    s = as_matrix_of_order(matrix, 3, name="S")
    return float(4.0 * (1.0 + np.trace(s)))


# Index of the Landis column with the largest diagonal entry (4 q_k^2);
# ties go to the lowest index
def _select_column(landis_matrix: np.ndarray, column: int | None) -> int:
    if column is None:
        column = int(np.argmax(np.diag(landis_matrix)))
    elif not 0 <= column < 4:
        raise UsageException(f"Landis column must be 0..3, got {column}")
    logger.debug(f"Using Landis column {column}")
    return column


def quat_from_rotation(
    matrix, tol: float = ROTATION_TOL, column: int | None = None
) -> Quaternion:
    s = as_matrix_of_order(matrix, 3, name="S")
    deviation = orthogonality_deviation(s)
    if deviation > tol:
        raise DomainException(f"Matrix is not orthogonal (deviation {deviation:.3e} > {tol:.1e})")
    # Q from a positive-diagonal QR shares the parity of S and is orthogonal
    # to machine precision
    if parity(qr_givens(s).Q) < 0:
        raise DomainException("Matrix has parity -1; reflections are not in the image of Phi")
    landis_matrix = landis(s)
    index = _select_column(landis_matrix, column)
    chosen = landis_matrix[:, index]
    if chosen @ chosen < DEGENERATE_TOL:
        raise DomainException(f"Landis column {index} is degenerate")
    return normalize(Quaternion.from_array(chosen)).canonical()


# D_w / Gamma: the quadratic conversion Phi of a Landis column divided by the
# column's norm-square; no square root is taken unless rows are rescaled
def orthogonalize_rational(
    matrix, rescale_rows: bool = False, column: int | None = None
) -> np.ndarray:
    s = as_matrix_of_order(matrix, 3, name="S")
    landis_matrix = landis(s)
    chosen = landis_matrix[:, _select_column(landis_matrix, column)]
    gamma = float(chosen @ chosen)
    if gamma < DEGENERATE_TOL:
        raise DomainException(f"Landis column is degenerate (norm-square {gamma:.3e})")
    result = phi_so3(Quaternion.from_array(chosen)) / gamma
    if rescale_rows:
        result = result / np.linalg.norm(result, axis=1, keepdims=True)
    logger.debug(f"Rational orthogonalization with Gamma = {gamma:.6g}")
    return result


# Geodesic angle between two rotations, from the sine and cosine of
# R1^T R2 so that small angles keep full precision
def rotation_angle(first, second) -> float:
    relative = as_matrix_of_order(first, 3).T @ as_matrix_of_order(second, 3)
    axial = 0.5 * np.array(
        [
            relative[2, 1] - relative[1, 2],
            relative[0, 2] - relative[2, 0],
            relative[1, 0] - relative[0, 1],
        ]
    )
    cosine = 0.5 * (np.trace(relative) - 1.0)
    return float(np.arctan2(np.linalg.norm(axial), cosine))


# K = [[sigma, z^T], [z, B + B^T - sigma I]] with sigma = trace B, so that
# q^T K q = trace(Phi(q)^T B)
def davenport_matrix(b: np.ndarray) -> np.ndarray:
    sigma = np.trace(b)
    z = np.array([b[2, 1] - b[1, 2], b[0, 2] - b[2, 0], b[1, 0] - b[0, 1]])
    k = np.empty((4, 4))
    k[0, 0] = sigma
    k[0, 1:] = z
    k[1:, 0] = z
    k[1:, 1:] = b + b.T - sigma * np.eye(3)
    return k


def attitude_profile(problem: WahbaProblem) -> AttitudeProfile:
    b = (problem.observations.T * problem.weights) @ problem.references
    return AttitudeProfile(b, davenport_matrix(b))


def solve_wahba_davenport(problem: WahbaProblem) -> Quaternion:
    profile = attitude_profile(problem)
    factors = jacobi_eigendecomposition(profile.K)
    gap = float(factors.D[3] - factors.D[2])
    logger.debug(f"Davenport eigenvalues {factors.D}, gap {gap:.3e}")
    if gap <= EIGEN_GAP_TOL * max(1.0, problem.total_weight):
        raise AmbiguityException(
            f"Largest eigenvalue of K is not simple (gap {gap:.3e}); attitude is ambiguous"
        )
    return normalize(Quaternion.from_array(factors.U[:, 3])).canonical()


# The orthogonal polar factor of B maximizes trace(A^T B)
def solve_wahba_svd(problem: WahbaProblem) -> np.ndarray:
    profile = attitude_profile(problem)
    rotation = polar_decompose(profile.B).R
    if parity(rotation) < 0:
        raise DomainException(
            "Polar factor of B is a reflection; the reflection case is not handled"
        )
    return rotation


def wahba_loss(matrix, problem: WahbaProblem) -> float:
    a = as_matrix_of_order(matrix, 3, name="A")
    residuals = problem.observations - problem.references @ a.T
    return float(0.5 * np.sum(problem.weights * np.sum(residuals * residuals, axis=1)))


def wahba_gain(matrix, problem: WahbaProblem) -> float:
    a = as_matrix_of_order(matrix, 3, name="A")
    return float(np.trace(a.T @ attitude_profile(problem).B))
