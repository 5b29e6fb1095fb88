#!/usr/bin/env python3
#
# polar.py
#
# Provides the unique polar decomposition A = R exp(X) of an invertible
# matrix, the symmetric matrix exponential and logarithm, the SVD obtained
# from the polar form, and the retraction of Gl(n) onto O(n)
#
# MIT License - see LICENSE
from dataclasses import dataclass
from logging import getLogger

import numpy as np

from .linalg_exception import ConvergenceException, DomainException, UsageException
from .spectral import jacobi_eigendecomposition
from .stiefel import gram_schmidt
from .utils.matrix_utils import (
    as_matrix,
    as_symmetric,
    max_abs,
    orthogonality_deviation,
)

logger = getLogger(__name__)

# A is singular when sigma_min <= SINGULARITY_TOL * |A|_F
SINGULARITY_TOL = 1e-10
# Series terms below this fraction of |log| end the log series
SERIES_TOL = 1e-17
SERIES_MAX_TERMS = 2000
# Newton-Schulz passes polishing the orthogonal factor
REFINE_STEPS = 3


@dataclass(frozen=True, eq=False)
class PolarFactors:
    R: np.ndarray
    P: np.ndarray
    X: np.ndarray

    # A(t) = R exp((1 - t) X): A(0) = R P, A(1) = R
    def retraction(self, t: float) -> np.ndarray:
        if not 0.0 <= t <= 1.0:
            raise UsageException(f"Retraction parameter must lie in [0, 1], got {t}")
        return self.R @ matrix_exp_sym((1.0 - t) * self.X)


@dataclass(frozen=True, eq=False)
class SVDFactors:
    W: np.ndarray
    Gamma: np.ndarray
    V: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.W * self.Gamma) @ self.V.T


# V holds the Jacobi eigenvectors of A^T A. The singular values are the column
# norms of A V rather than square roots of the eigenvalues, which sink into
# rounding noise once sigma_min / sigma_max nears the root of machine epsilon
def _singular_factors(a: np.ndarray) -> SVDFactors:
    factors = jacobi_eigendecomposition(a.T @ a)
    image = a @ factors.U
    gamma = np.linalg.norm(image, axis=0)
    order = np.argsort(-gamma, kind="stable")
    gamma, v, image = gamma[order], factors.U[:, order], image[:, order]
    if gamma[-1] <= SINGULARITY_TOL * float(np.linalg.norm(a)):
        raise DomainException(
            f"Matrix is singular: smallest singular value is {gamma[-1]:.6e} "
            f"(smallest eigenvalue of A^T A is {factors.D[0]:.6e})"
        )
    # Largest singular values first: their columns A v / gamma are accurate, so
    # Gram-Schmidt only corrects the columns of the smallest ones
    w = gram_schmidt((image / gamma).T).columns
    return SVDFactors(w, gamma, v)


def _spectral_function(v: np.ndarray, values: np.ndarray) -> np.ndarray:
    result = (v * values) @ v.T
    return (result + result.T) / 2


def polar_decompose(matrix) -> PolarFactors:
    a = as_matrix(matrix, name="A")
    return _polar_from_factors(_singular_factors(a))


# R = W V^T, P = V diag(gamma) V^T and X = V diag(log gamma) V^T
def _polar_from_factors(factors: SVDFactors) -> PolarFactors:
    v, gamma = factors.V, factors.Gamma
    p = _spectral_function(v, gamma)
    x = _spectral_function(v, np.log(gamma))
    r = _refine_orthogonal(factors.W @ v.T)
    logger.debug(
        f"Polar factor of order {v.shape[0]}: singular values in [{gamma[-1]:.6e}, {gamma[0]:.6e}]"
    )
    return PolarFactors(r, p, x)


# Newton-Schulz steps R <- R (3I - R^T R) / 2, which converge quadratically to
# the polar factor of an R that is already close to orthogonal
def _refine_orthogonal(r: np.ndarray) -> np.ndarray:
    identity = np.eye(r.shape[0])
    deviation = orthogonality_deviation(r)
    for _ in range(REFINE_STEPS):
        refined = 0.5 * r @ (3.0 * identity - r.T @ r)
        refined_deviation = orthogonality_deviation(refined)
        if refined_deviation >= deviation:
            break
        r, deviation = refined, refined_deviation
    return r


def matrix_exp_sym(matrix) -> np.ndarray:
    factors = jacobi_eigendecomposition(as_symmetric(matrix, name="X"))
    return _spectral_function(factors.U, np.exp(factors.D))


def matrix_log_spd(matrix) -> np.ndarray:
    p = as_symmetric(matrix, name="P")
    factors = jacobi_eigendecomposition(p)
    if factors.D[0] <= 0.0:
        raise DomainException(
            f"Logarithm requires a positive definite matrix, smallest eigenvalue {factors.D[0]:.6e}"
        )
    return _spectral_function(factors.U, np.log(factors.D))


# log P as a I + log(e^-a P) with a = ln(trace(P) / n), summing the Mercator
# series of the scaled matrix; usable only when |e^-a P - I|_F < 1
def matrix_log_series(matrix, max_terms: int = SERIES_MAX_TERMS) -> np.ndarray:
    p = as_symmetric(matrix, name="P")
    n = p.shape[0]
    trace = float(np.trace(p))
    if trace <= 0.0:
        raise DomainException(f"Logarithm requires a positive definite matrix, trace {trace:.6e}")
    shift = np.log(trace / n)
    deviation = np.exp(-shift) * p - np.eye(n)
    radius = float(np.linalg.norm(deviation))
    if radius >= 1.0:
        raise DomainException(
            f"Scaled matrix lies outside the series ball: |Z - I|_F = {radius:.6f}"
        )

    result = np.zeros_like(p)
    power = np.eye(n)
    for m in range(1, max_terms + 1):
        power = power @ deviation
        term = ((-1) ** (m + 1) / m) * power
        result += term
        if max_abs(term) <= SERIES_TOL * max(1.0, max_abs(result)):
            logger.debug(f"Log series converged after {m} terms")
            return shift * np.eye(n) + (result + result.T) / 2
    raise ConvergenceException(
        f"Log series did not converge in {max_terms} terms (|Z - I|_F = {radius:.6f})"
    )


# A = W diag(Gamma) V^T with Gamma descending and W = R V
def svd_via_polar(matrix) -> SVDFactors:
    factors = _singular_factors(as_matrix(matrix, name="A"))
    polar = _polar_from_factors(factors)
    return SVDFactors(polar.R @ factors.V, factors.Gamma, factors.V)


def polar_retraction_path(matrix, t: float) -> np.ndarray:
    return polar_decompose(matrix).retraction(t)
