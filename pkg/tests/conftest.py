#!/usr/bin/env python3
#
# conftest.py
#
# Shared fixtures: a seeded generator, random orthogonal matrices, unit
# quaternions and Wahba problems, and the cofactor-expansion determinant used
# as an independent parity oracle
#
# MIT License - see LICENSE
import numpy as np
import pytest

from orthoframe.linalg import Quaternion, WahbaProblem, normalize, phi_so3

SEED = 20240601


# Laplace expansion along the first row; test-only sign oracle
def _cofactor_det(matrix: np.ndarray) -> float:
    n = matrix.shape[0]
    if n == 1:
        return float(matrix[0, 0])
    total = 0.0
    for j in range(n):
        minor = np.delete(matrix[1:], j, axis=1)
        total += (-1) ** j * matrix[0, j] * _cofactor_det(minor)
    return total


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture
def cofactor_det():
    return _cofactor_det


# Orthogonal Q of a Gaussian matrix; either parity occurs
@pytest.fixture
def random_orthogonal(rng):
    def make(n: int) -> np.ndarray:
        q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        return q

    return make


@pytest.fixture
def random_rotation(random_orthogonal):
    def make(n: int = 3) -> np.ndarray:
        q = random_orthogonal(n)
        if _cofactor_det(q) < 0:
            q[:, 0] = -q[:, 0]
        return q

    return make


@pytest.fixture
def random_unit_quaternion(rng):
    def make() -> Quaternion:
        return normalize(Quaternion.from_array(rng.standard_normal(4)))

    return make


@pytest.fixture
def random_unit_vector(rng):
    def make(n: int = 3) -> np.ndarray:
        v = rng.standard_normal(n)
        return v / np.linalg.norm(v)

    return make


# Builds obs_i = Phi(q) ref_i (plus optional Gaussian noise, renormalized)
@pytest.fixture
def make_wahba_problem(rng, random_unit_vector):
    def make(q: Quaternion, count: int = 3, noise: float = 0.0) -> WahbaProblem:
        rotation = phi_so3(q)
        weights = rng.uniform(0.5, 2.0, count)
        references = np.array([random_unit_vector() for _ in range(count)])
        observations = references @ rotation.T
        if noise:
            observations = observations + noise * rng.standard_normal((count, 3))
            observations /= np.linalg.norm(observations, axis=1, keepdims=True)
        return WahbaProblem(weights, references, observations)

    return make
