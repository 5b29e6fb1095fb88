#!/usr/bin/env python3
#
# spectral.py
#
# Provides symmetric eigendecomposition by cyclic Jacobi sweeps, driven by the
# off-diagonal energy Lambda(A), along with the variational minimum
# eigenpair, definiteness tests and the SPD square root
#
# MIT License - see LICENSE
from dataclasses import dataclass, field
from logging import getLogger

import numpy as np

from .linalg_exception import ConvergenceException, DomainException, UsageException
from .utils.matrix_utils import (
    as_symmetric,
    check_plane,
    max_abs,
    rotate_columns,
    rotate_rows,
)

logger = getLogger(__name__)

MAX_SWEEPS = 50
# Default Jacobi tolerance relative to |A|_F; convergence means Lambda <= tol^2
RELATIVE_TOL = 1e-12
# Default positive-definiteness threshold relative to |A|_inf
DEFINITE_TOL = 1e-12
# Negative eigenvalues down to -PSD_TOL * |C|_inf are clamped to zero
PSD_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SpectralFactors:
    U: np.ndarray
    D: np.ndarray
    # Lambda before each sweep, ending with the converged value
    offdiag_history: tuple[float, ...] = field(default=())

    def reconstruct(self) -> np.ndarray:
        return (self.U * self.D) @ self.U.T


def _energy(a: np.ndarray) -> float:
    off_diagonal = a - np.diag(np.diag(a))
    return float(np.sum(off_diagonal * off_diagonal))


# Lambda(A), the sum of the squares of the off-diagonal entries
def offdiag_energy(matrix) -> float:
    return _energy(as_symmetric(matrix))


# The zeroing angle of smallest magnitude, in [-pi/4, pi/4], used by the
# sweep; beyond pi/4 a rotation trades the two diagonal entries
def _inner_angle(a: np.ndarray, r: int, s: int) -> float:
    theta = 0.5 * np.arctan2(2.0 * a[r, s], a[s, s] - a[r, r])
    if theta > np.pi / 4:
        theta -= np.pi / 2
    elif theta < -np.pi / 4:
        theta += np.pi / 2
    return float(theta)


# Shifting by pi/2 negates both cos(2 theta) and sin(2 theta), so the zero
# of b_rs is kept while the angle lands in [0, pi/2]
def _closed_form_angle(a: np.ndarray, r: int, s: int) -> float:
    theta = _inner_angle(a, r, s)
    if theta < 0.0:
        theta += np.pi / 2
    return theta


def _check_pivot(a: np.ndarray, r: int, s: int) -> None:
    check_plane(a.shape[0], r, s)
    if a[r, s] == 0.0:
        raise UsageException(f"Entry a[{r}, {s}] is already zero; nothing to rotate")


# Angle theta_0 in [0, pi/2] for which U^T A U has a zero (r, s) entry, with U
# the plane rotation carrying [[cos, sin], [-sin, cos]] at rows/columns r, s
def jacobi_rotation_angle(matrix, r: int, s: int) -> float:
    a = as_symmetric(matrix)
    _check_pivot(a, r, s)
    return _closed_form_angle(a, r, s)


# The (r, s) entry of U_theta^T A U_theta
def rotated_offdiag_entry(a: np.ndarray, r: int, s: int, theta: float) -> float:
    return float(
        0.5 * np.sin(2 * theta) * (a[r, r] - a[s, s]) + np.cos(2 * theta) * a[r, s]
    )


# Locates the zeroing angle by bisection: b_rs(0) = a_rs and
# b_rs(pi/2) = -a_rs have opposite signs, so a root lies in between
def jacobi_rotation_angle_ivt(
    matrix, r: int, s: int, tol: float = 1e-15, max_iter: int = 200
) -> float:
    a = as_symmetric(matrix)
    _check_pivot(a, r, s)
    low, high = 0.0, np.pi / 2
    low_value = rotated_offdiag_entry(a, r, s, low)
    for _ in range(max_iter):
        mid = 0.5 * (low + high)
        mid_value = rotated_offdiag_entry(a, r, s, mid)
        if mid_value == 0.0 or high - low <= tol:
            return mid
        if np.sign(mid_value) == np.sign(low_value):
            low, low_value = mid, mid_value
        else:
            high = mid
    return 0.5 * (low + high)


# Applies the frame change A <- U^T A U (and U_acc <- U_acc U) for the plane
# (r, s), forcing the annihilated pair to exact zero
def _apply_jacobi_rotation(
    a: np.ndarray, frame: np.ndarray, r: int, s: int, theta: float
) -> None:
    c, sn = np.cos(theta), np.sin(theta)
    rotate_columns(a, r, s, c, sn)
    rotate_rows(a, r, s, c, -sn)
    rotate_columns(frame, r, s, c, sn)
    a[r, s] = a[s, r] = 0.0


# Orders eigenpairs ascending and fixes each eigenvector's sign so that its
# largest-magnitude component is positive (ties go to the lowest index)
def _canonicalize(
    eigenvalues: np.ndarray, vectors: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = vectors[:, order]
    for k in range(vectors.shape[1]):
        pivot = int(np.argmax(np.abs(vectors[:, k])))
        if vectors[pivot, k] < 0:
            vectors[:, k] = -vectors[:, k]
    return eigenvalues, vectors


def jacobi_eigendecomposition(
    matrix, tol: float | None = None, max_sweeps: int = MAX_SWEEPS
) -> SpectralFactors:
    a = as_symmetric(matrix)
    n = a.shape[0]
    if tol is not None and tol <= 0:
        raise UsageException(f"Jacobi tolerance must be positive, got {tol}")

    # Sweeps run on A / 2^exponent, which has |A|_inf in [0.5, 1) and keeps
    # Lambda clear of overflow and underflow; the power-of-two scaling is exact
    exponent = int(np.frexp(max_abs(a))[1])
    a = np.ldexp(a, -exponent)
    if tol is None:
        tol = RELATIVE_TOL * float(np.linalg.norm(a))
    else:
        tol = float(np.ldexp(tol, -exponent))

    frame = np.eye(n)
    energy = _energy(a)
    history = [energy]
    sweeps = 0
    while energy > tol * tol:
        if sweeps == max_sweeps:
            raise ConvergenceException(
                f"Jacobi sweeps did not converge after {max_sweeps} sweeps, residual Lambda = {_unscaled(energy, exponent):.6e}"
            )
        for r in range(n - 1):
            for s in range(r + 1, n):
                if a[r, s] != 0.0:
                    _apply_jacobi_rotation(a, frame, r, s, _inner_angle(a, r, s))
        sweeps += 1
        previous, energy = energy, _energy(a)
        history.append(energy)
        logger.debug(
            f"Sweep {sweeps}: Lambda {_unscaled(previous, exponent):.6e} -> {_unscaled(energy, exponent):.6e}"
        )
        if energy >= previous:
            logger.warning(
                f"Sweep {sweeps} did not decrease Lambda ({_unscaled(previous, exponent):.6e} -> {_unscaled(energy, exponent):.6e})"
            )

    logger.debug(
        f"Jacobi converged after {sweeps} sweeps, Lambda = {_unscaled(energy, exponent):.3e}"
    )
    eigenvalues, vectors = _canonicalize(np.ldexp(np.diag(a), exponent), frame)
    return SpectralFactors(
        vectors, eigenvalues, tuple(_unscaled(value, exponent) for value in history)
    )


# Lambda of the scaled sweep matrix expressed for the caller's matrix; inf
# when it exceeds the float range
def _unscaled(energy: float, exponent: int) -> float:
    with np.errstate(over="ignore"):
        return float(np.ldexp(energy, 2 * exponent))


# The minimum of (Ax, x) over the unit sphere and a unit vector attaining it
def min_eigenpair(matrix) -> tuple[float, np.ndarray]:
    factors = jacobi_eigendecomposition(matrix)
    return float(factors.D[0]), factors.U[:, 0].copy()


def is_positive_definite(matrix, tol_pd: float | None = None) -> bool:
    a = as_symmetric(matrix)
    if tol_pd is None:
        tol_pd = DEFINITE_TOL * max_abs(a)
    lambda_min, _ = min_eigenpair(a)
    return lambda_min > tol_pd


# P = V diag(sqrt(lambda)) V^T for positive semi-definite C
def sqrt_spd(matrix) -> np.ndarray:
    c = as_symmetric(matrix)
    factors = jacobi_eigendecomposition(c)
    floor = -PSD_TOL * max_abs(c)
    if factors.D[0] < floor:
        raise DomainException(
            f"Matrix is not positive semi-definite, smallest eigenvalue {factors.D[0]:.6e}"
        )
    roots = np.sqrt(np.clip(factors.D, 0.0, None))
    root = (factors.U * roots) @ factors.U.T
    return (root + root.T) / 2
