#!/usr/bin/env python3
#
# test_polar.py
#
# MIT License - see LICENSE
import numpy as np
import pytest
from numpy.testing import assert_allclose

from orthoframe.linalg import (
    ConvergenceException,
    DomainException,
    UsageException,
    jacobi_eigendecomposition,
    matrix_exp_sym,
    matrix_log_series,
    matrix_log_spd,
    polar_decompose,
    polar_retraction_path,
    svd_via_polar,
)


def random_symmetric(rng, n: int, scale: float = 1.0) -> np.ndarray:
    a = scale * rng.standard_normal((n, n))
    return (a + a.T) / 2


def smallest_singular_value(a: np.ndarray) -> float:
    return float(np.sqrt(jacobi_eigendecomposition(a.T @ a).D[0]))


def test_polar_of_orthogonal_matrix(random_orthogonal):
    q = random_orthogonal(4)
    factors = polar_decompose(q)
    assert_allclose(factors.R, q, atol=1e-12)
    assert_allclose(factors.P, np.eye(4), atol=1e-12)
    assert_allclose(factors.X, np.zeros((4, 4)), atol=1e-12)


def test_polar_of_scaled_identity():
    factors = polar_decompose(2 * np.eye(3))
    assert_allclose(factors.R, np.eye(3), atol=1e-15)
    assert_allclose(factors.P, 2 * np.eye(3), atol=1e-15)
    assert_allclose(factors.X, np.log(2) * np.eye(3), atol=1e-15)


def test_polar_factor_residuals(rng):
    for _ in range(100):
        a = rng.standard_normal((5, 5))
        factors = polar_decompose(a)
        assert np.linalg.norm(factors.R @ factors.P - a) <= 1e-9 * np.linalg.norm(a)
        assert np.max(np.abs(factors.R.T @ factors.R - np.eye(5))) <= 1e-10
        assert np.max(np.abs(matrix_exp_sym(factors.X) - factors.P)) <= 1e-9


def test_polar_is_deterministic(rng):
    a = rng.standard_normal((4, 4))
    first, second = polar_decompose(a), polar_decompose(a)
    assert np.array_equal(first.R, second.R)
    assert np.array_equal(first.P, second.P)
    assert np.array_equal(first.X, second.X)


def test_polar_rejects_singular_matrix():
    with pytest.raises(DomainException, match="smallest singular value"):
        polar_decompose([[1.0, 2.0], [2.0, 4.0]])
    with pytest.raises(DomainException, match="smallest eigenvalue of A\\^T A"):
        polar_decompose(np.diag([1.0, 1.0, 1e-11]))


# sigma_min = 1e-9 |A| is invertible by the singular value threshold even
# though lambda_min(A^T A) = 1e-18 is lost to rounding
def test_polar_of_ill_conditioned_matrix(random_orthogonal):
    q1, q2 = random_orthogonal(4), random_orthogonal(4)
    a = (q1 * np.array([1.0, 1.0, 1.0, 1e-9])) @ q2.T
    factors = polar_decompose(a)
    assert np.max(np.abs(factors.R.T @ factors.R - np.eye(4))) <= 1e-12
    assert np.linalg.norm(factors.R @ factors.P - a) <= 1e-12 * np.linalg.norm(a)
    assert_allclose(factors.R, q1 @ q2.T, atol=1e-8)
    assert np.all(np.isfinite(factors.X))

    svd = svd_via_polar(a)
    assert_allclose(svd.Gamma, [1.0, 1.0, 1.0, 1e-9], rtol=1e-5)
    assert np.linalg.norm(svd.reconstruct() - a) <= 1e-12 * np.linalg.norm(a)


def test_polar_factor_is_continuous(rng):
    a = rng.standard_normal((4, 4))
    delta = rng.standard_normal((4, 4))
    delta *= 1e-6 / np.linalg.norm(delta)
    change = np.linalg.norm(polar_decompose(a + delta).R - polar_decompose(a).R)
    assert change <= 10 / smallest_singular_value(a) * 1e-6


def test_matrix_exp_sym():
    assert_allclose(matrix_exp_sym(np.zeros((3, 3))), np.eye(3), atol=0)
    assert_allclose(
        matrix_exp_sym(np.diag([np.log(2), np.log(3)])), np.diag([2.0, 3.0]), atol=1e-14
    )


def test_log_of_exp_round_trip(rng):
    x = random_symmetric(rng, 4)
    assert_allclose(matrix_log_spd(matrix_exp_sym(x)), x, atol=1e-9)


def test_matrix_log_spd():
    assert_allclose(matrix_log_spd(np.eye(3)), np.zeros((3, 3)), atol=0)
    assert_allclose(matrix_log_spd(np.e * np.eye(2)), np.eye(2), atol=1e-15)


def test_matrix_log_spd_recovers_generator(rng):
    x0 = random_symmetric(rng, 4)
    p = matrix_exp_sym(x0)
    x = matrix_log_spd(p)
    assert_allclose(x, x0, atol=1e-8)
    assert np.linalg.norm(matrix_exp_sym(x) - p) <= 1e-9 * np.linalg.norm(p)


def test_matrix_log_spd_rejects_indefinite():
    with pytest.raises(DomainException):
        matrix_log_spd(np.diag([1.0, -1.0]))


# The scaled Mercator series agrees with the spectral logarithm on
# well-conditioned input
def test_log_series_agrees_with_spectral_log(rng):
    x0 = random_symmetric(rng, 3, scale=0.1)
    p = matrix_exp_sym(x0)
    assert_allclose(matrix_log_series(p), matrix_log_spd(p), atol=1e-10)


def test_log_series_limits():
    with pytest.raises(DomainException):
        matrix_log_series(np.diag([1.0, 100.0]))
    with pytest.raises(ConvergenceException):
        matrix_log_series(np.diag([1.0, 1.5]), max_terms=3)


def test_svd_of_orthogonal_matrix(random_orthogonal):
    factors = svd_via_polar(random_orthogonal(4))
    assert_allclose(factors.Gamma, np.ones(4), atol=1e-12)


def test_svd_of_diagonal():
    factors = svd_via_polar(np.diag([3.0, 2.0]))
    assert_allclose(factors.Gamma, [3.0, 2.0], atol=1e-15)
    assert_allclose(np.abs(factors.W), np.eye(2), atol=1e-15)
    assert_allclose(np.abs(factors.V), np.eye(2), atol=1e-15)


def test_svd_residuals(rng):
    for _ in range(100):
        a = rng.standard_normal((5, 5))
        factors = svd_via_polar(a)
        assert np.linalg.norm(factors.reconstruct() - a) <= 1e-9 * np.linalg.norm(a)
        assert np.all(factors.Gamma > 0)
        assert np.all(np.diff(factors.Gamma) <= 0)
        eigenvalues = jacobi_eigendecomposition(a.T @ a).D
        assert_allclose(np.sort(factors.Gamma**2), eigenvalues, atol=1e-9)


def test_svd_rejects_singular_matrix():
    with pytest.raises(DomainException):
        svd_via_polar(np.zeros((3, 3)) + np.diag([1.0, 1.0, 0.0]))


def test_retraction_path_endpoints():
    a = 4 * np.eye(2)
    assert_allclose(polar_retraction_path(a, 0.0), a, atol=1e-9)
    assert_allclose(polar_retraction_path(a, 1.0), np.eye(2), atol=1e-15)
    assert_allclose(polar_retraction_path(a, 0.5), 2 * np.eye(2), atol=1e-14)


def test_retraction_path_stays_invertible(rng):
    a = rng.standard_normal((4, 4))
    factors = polar_decompose(a)
    assert_allclose(factors.retraction(0.0), a, atol=1e-9)
    assert_allclose(factors.retraction(1.0), factors.R, atol=0)
    floor = min(1.0, smallest_singular_value(a)) - 1e-9
    for t in np.linspace(0.0, 1.0, 11):
        assert smallest_singular_value(polar_retraction_path(a, t)) >= floor


def test_retraction_parameter_is_checked():
    with pytest.raises(UsageException):
        polar_retraction_path(np.eye(2), 1.5)
