#!/usr/bin/env python3
#
# quat.py
#
# Provides quaternion algebra, the double-cover map Phi from unit quaternions
# onto SO(3), and Rodrigues rotation of 3-vectors
#
# Quaternions are scalar-first everywhere: (x, y, z, w) with scalar part x
# and vector part sigma = (y, z, w)
#
# MIT License - see LICENSE
from dataclasses import dataclass
from logging import getLogger

import numpy as np

from .linalg_exception import DomainException
from .utils.matrix_utils import as_vector

logger = getLogger(__name__)

# |nrmsq(q) - 1| accepted for a validated unit quaternion
UNIT_TOL = 1e-12
# Looser unit-ness accepted on entry to operations that require a rotation
ROTATION_UNIT_TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    x: float
    y: float = 0.0
    z: float = 0.0
    w: float = 0.0

    def __post_init__(self) -> None:
        for name in ("x", "y", "z", "w"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def __iter__(self):
        return iter((self.x, self.y, self.z, self.w))

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x, -self.y, -self.z, -self.w)

    @classmethod
    def from_array(cls, values) -> "Quaternion":
        return cls(*as_vector(values, 4, name="quaternion"))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.w])

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.y, self.z, self.w])

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return abs(nrmsq(self) - 1.0) <= tol

    # Picks the representative of {q, -q} with non-negative scalar part; a zero
    # scalar part defers to the first non-zero component
    def canonical(self) -> "Quaternion":
        for component in self:
            if component > 0:
                return self
            if component < 0:
                return -self
        return self


IDENTITY = Quaternion(1.0)


def qprod(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(
        a.x * b.x - a.y * b.y - a.z * b.z - a.w * b.w,
        a.x * b.y + a.y * b.x + a.z * b.w - a.w * b.z,
        a.x * b.z - a.y * b.w + a.z * b.x + a.w * b.y,
        a.x * b.w + a.y * b.z - a.z * b.y + a.w * b.x,
    )


def conjq(q: Quaternion) -> Quaternion:
    return Quaternion(q.x, -q.y, -q.z, -q.w)


def nrmsq(q: Quaternion) -> float:
    return q.x * q.x + q.y * q.y + q.z * q.z + q.w * q.w


def qinv(q: Quaternion) -> Quaternion:
    norm_square = nrmsq(q)
    if norm_square == 0.0:
        raise DomainException("The zero quaternion has no inverse")
    conjugate = conjq(q)
    return Quaternion(*(component / norm_square for component in conjugate))


# Scales q to unit norm without changing its sign
def normalize(q: Quaternion) -> Quaternion:
    norm_square = nrmsq(q)
    if norm_square == 0.0:
        raise DomainException("The zero quaternion cannot be normalized")
    norm = np.sqrt(norm_square)
    return Quaternion(*(component / norm for component in q))


# The quadratic map Phi(q); orthogonal with parity +1 whenever q is a unit
# quaternion, and Phi(q) = Phi(-q) exactly
def phi_so3(q: Quaternion) -> np.ndarray:
    x, y, z, w = q
    return np.array(
        [
            [x * x + y * y - z * z - w * w, 2 * (y * z - x * w), 2 * (y * w + x * z)],
            [2 * (y * z + x * w), x * x - y * y + z * z - w * w, 2 * (z * w - x * y)],
            [2 * (y * w - x * z), 2 * (z * w + x * y), x * x - y * y - z * z + w * w],
        ]
    )


# Rotates kappa by the unit quaternion q using
# kappa' = kappa + 2x (sigma x kappa) + 2 (sigma x (sigma x kappa))
def rodrigues_apply(q: Quaternion, kappa) -> np.ndarray:
    kappa = as_vector(kappa, 3, name="kappa")
    if not q.is_unit(ROTATION_UNIT_TOL):
        raise DomainException(
            f"Rodrigues rotation requires a unit quaternion, nrmsq(q) = {nrmsq(q):.15g}"
        )
    sigma = q.vector
    sigma_cross_kappa = np.cross(sigma, kappa)
    return kappa + 2 * q.x * sigma_cross_kappa + 2 * np.cross(sigma, sigma_cross_kappa)
