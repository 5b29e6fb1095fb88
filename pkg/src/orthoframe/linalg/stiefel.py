#!/usr/bin/env python3
#
# stiefel.py
#
# Provides Givens rotation kernels, Givens QR, continuous Givens paths that
# carry any orthogonal matrix to I or I- = diag(1, ..., 1, -1), the
# determinant-free parity classifier, frame projection and completion, the
# canonical Givens loop, and its lift to the unit quaternions
#
# Conventions: a Givens step (i, j, theta) pre-multiplies by the plane
# rotation with block [[c, s], [-s, c]] at rows i, j, so that (a, b) maps to
# (rho, 0) with c = a / rho, s = b / rho and rho = hypot(a, b) >= 0
#
# MIT License - see LICENSE
from dataclasses import dataclass, field
from logging import getLogger

import numpy as np

from .linalg_exception import (
    DomainException,
    ResolutionException,
    UsageException,
)
from .quat import Quaternion
from .utils.matrix_utils import (
    as_matrix,
    as_matrix_of_order,
    as_vector,
    check_plane,
    orthogonality_deviation,
    rotate_rows,
)

logger = getLogger(__name__)

# Entry-wise tolerance on M^T M - I for matrices treated as orthogonal
ORTHOGONALITY_TOL = 1e-8
# Entry-wise tolerance on the Gram matrix of a Frame
FRAME_TOL = 1e-10
# Gram-Schmidt pivots below this fraction of the input norm mean dependence
INDEPENDENCE_TOL = 1e-10
# R diagonal entries below this fraction of |M|_F flag a singular QR input
RANK_TOL = 1e-10
# Largest rotation angle between consecutive loop samples that can be lifted
LIFT_MAX_STEP = 0.5
# Tolerance for classifying lift endpoints as equal or antipodal
ENDPOINT_TOL = 1e-6

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class GivensStep:
    i: int
    j: int
    theta: float

    def __post_init__(self) -> None:
        if not 0 <= self.i < self.j:
            raise UsageException(f"Givens step needs 0 <= i < j, got ({self.i}, {self.j})")
        if not 0.0 <= self.theta <= TWO_PI:
            raise UsageException(f"Givens angle must lie in [0, 2 pi], got {self.theta}")

    def apply_to(self, matrix: np.ndarray, fraction: float = 1.0) -> None:
        angle = fraction * self.theta
        rotate_rows(matrix, self.i, self.j, np.cos(angle), np.sin(angle))


@dataclass(frozen=True, eq=False)
class GivensPath:
    origin: np.ndarray
    steps: tuple[GivensStep, ...] = field(default=())

    @property
    def order(self) -> int:
        return self.origin.shape[0]

    # The accumulated rotation G(tau); every step takes an equal share of
    # [0, 1] and advances linearly in its angle
    def transform(self, tau: float) -> np.ndarray:
        if not 0.0 <= tau <= 1.0:
            raise UsageException(f"Path parameter must lie in [0, 1], got {tau}")
        rotation = np.eye(self.order)
        if not self.steps:
            return rotation
        position = tau * len(self.steps)
        completed = min(int(position), len(self.steps))
        for step in self.steps[:completed]:
            step.apply_to(rotation)
        if completed < len(self.steps):
            self.steps[completed].apply_to(rotation, position - completed)
        return rotation

    def sample(self, tau: float) -> np.ndarray:
        return self.transform(tau) @ self.origin

    @property
    def endpoint(self) -> np.ndarray:
        return self.sample(1.0)


@dataclass(frozen=True, eq=False)
class QRFactors:
    Q: np.ndarray
    R: np.ndarray
    is_singular: bool = False


@dataclass(frozen=True, eq=False)
class Frame:
    columns: np.ndarray

    def __post_init__(self) -> None:
        columns = as_matrix(self.columns, square=False, name="frame")
        n, k = columns.shape
        if k > n:
            raise DomainException(f"A frame in R^{n} has at most {n} vectors, got {k}")
        deviation = orthogonality_deviation(columns)
        if deviation > FRAME_TOL:
            raise DomainException(f"Frame vectors are not orthonormal (deviation {deviation:.3e})")
        columns.setflags(write=False)
        object.__setattr__(self, "columns", columns)

    @classmethod
    def from_vectors(cls, vectors) -> "Frame":
        return cls(np.column_stack([as_vector(v) for v in vectors]))

    @property
    def n(self) -> int:
        return self.columns.shape[0]

    @property
    def k(self) -> int:
        return self.columns.shape[1]

    def vector(self, index: int) -> np.ndarray:
        return self.columns[:, index].copy()

    @property
    def matrix(self) -> np.ndarray:
        return self.columns.copy()


@dataclass(frozen=True, eq=False)
class LoopLift:
    quaternions: tuple[Quaternion, ...]

    def _gap(self, sign: float) -> float:
        start = self.quaternions[0].as_array()
        end = self.quaternions[-1].as_array()
        return float(np.linalg.norm(end + sign * start))

    @property
    def is_closed(self) -> bool:
        return self._gap(-1.0) <= ENDPOINT_TOL

    @property
    def is_antipodal(self) -> bool:
        return self._gap(1.0) <= ENDPOINT_TOL


def givens_coeffs(a: float, b: float) -> tuple[float, float, float]:
    rho = float(np.hypot(a, b))
    if rho == 0.0:
        return 1.0, 0.0, 0.0
    return a / rho, b / rho, rho


def apply_givens(matrix, step: GivensStep) -> np.ndarray:
    result = as_matrix(matrix, square=False).copy()
    check_plane(result.shape[0], step.i, step.j)
    step.apply_to(result)
    return result


# Zeroes the sub-diagonal of work column by column with Givens rotations,
# mirroring every rotation onto the companions, and returns the steps taken;
# rotations are skipped only where the pair is already (rho, 0) with rho >= 0
def _eliminate(work: np.ndarray, *companions: np.ndarray) -> list[GivensStep]:
    steps = []
    n = work.shape[0]
    for k in range(n - 1):
        for j in range(k + 1, n):
            a, b = work[k, k], work[j, k]
            if b == 0.0 and a >= 0.0:
                continue
            c, s, _ = givens_coeffs(a, b)
            for target in (work, *companions):
                rotate_rows(target, k, j, c, s)
            work[j, k] = 0.0
            steps.append(GivensStep(k, j, float(np.arctan2(s, c) % TWO_PI)))
    return steps


def qr_givens(matrix) -> QRFactors:
    m = as_matrix(matrix, name="M")
    n = m.shape[0]
    r = m.copy()
    q_transpose = np.eye(n)
    steps = _eliminate(r, q_transpose)
    # The last diagonal entry has no partner row; a sign flip keeps it >= 0
    if r[n - 1, n - 1] < 0.0:
        r[n - 1, :] = -r[n - 1, :]
        q_transpose[n - 1, :] = -q_transpose[n - 1, :]
    singular = bool(np.any(np.abs(np.diag(r)) <= RANK_TOL * np.linalg.norm(m)))
    if singular:
        logger.warning("QR input is singular: R has a zero diagonal entry")
    logger.debug(f"Givens QR of order {n} used {len(steps)} rotations")
    return QRFactors(q_transpose.T, np.triu(r), singular)


def _check_orthogonal(matrix, tol: float) -> np.ndarray:
    m = as_matrix(matrix, name="M")
    deviation = orthogonality_deviation(m)
    if deviation > tol:
        raise DomainException(f"Matrix is not orthogonal (deviation {deviation:.3e} > {tol:.1e})")
    return m


# Builds the Givens path from M to I (parity +1) or to I- (parity -1)
def reduce_to_canonical(matrix, tol: float = ORTHOGONALITY_TOL) -> tuple[GivensPath, int]:
    m = _check_orthogonal(matrix, tol)
    work = m.copy()
    steps = _eliminate(work)
    parity_sign = 1 if work[-1, -1] > 0.0 else -1
    logger.debug(
        f"Reduced order-{m.shape[0]} matrix with {len(steps)} Givens steps, parity {parity_sign:+d}"
    )
    origin = m.copy()
    origin.setflags(write=False)
    return GivensPath(origin, tuple(steps)), parity_sign


def parity(matrix, tol: float = ORTHOGONALITY_TOL) -> int:
    return reduce_to_canonical(matrix, tol)[1]


def drop_last(frame: Frame) -> Frame:
    if frame.k != frame.n:
        raise UsageException(f"drop_last needs a full frame, got {frame.k} of {frame.n} vectors")
    return Frame(frame.columns[:, :-1])


# Completes an (n-1)-frame with the generalized cross product (signed
# cofactors of the missing column); the first result has parity +1, the
# second differs only in the sign of its last vector
def complete_frame(frame: Frame) -> tuple[Frame, Frame]:
    n = frame.n
    if n < 2 or frame.k != n - 1:
        raise UsageException(f"complete_frame needs n-1 vectors in R^n, got {frame.k} in R^{n}")
    columns = frame.columns
    cofactors = np.array(
        [
            (-1) ** (i + 1 + n) * np.linalg.det(np.delete(columns, i, axis=0))
            for i in range(n)
        ]
    )
    last = cofactors / np.linalg.norm(cofactors)
    return (
        Frame(np.column_stack([columns, last])),
        Frame(np.column_stack([columns, -last])),
    )


# Modified Gram-Schmidt with one re-orthogonalization pass
def gram_schmidt(vectors) -> Frame:
    inputs = [as_vector(v, name=f"vector {idx}") for idx, v in enumerate(vectors)]
    if not inputs:
        raise UsageException("gram_schmidt needs at least one vector")
    n = inputs[0].shape[0]
    basis: list[np.ndarray] = []
    for idx, vector in enumerate(inputs):
        if vector.shape[0] != n:
            raise UsageException(f"Vector {idx} has {vector.shape[0]} components, expected {n}")
        u = vector.copy()
        for _ in range(2):
            for e in basis:
                u -= (e @ u) * e
        pivot = float(np.linalg.norm(u))
        if pivot <= INDEPENDENCE_TOL * max(1.0, float(np.linalg.norm(vector))):
            raise DomainException(f"Vector {idx} is numerically dependent on its predecessors")
        basis.append(u / pivot)
    return Frame(np.column_stack(basis))


# gamma(theta): rotation by 2 theta in the plane of the second and third axes,
# all other axes fixed; gamma(0) = gamma(pi) = I
def givens_loop(n: int, theta: float) -> np.ndarray:
    if n < 3:
        raise UsageException(f"The Givens loop needs n >= 3, got {n}")
    if not 0.0 <= theta <= np.pi:
        raise UsageException(f"Loop parameter must lie in [0, pi], got {theta}")
    loop = np.eye(n)
    c, s = np.cos(2 * theta), np.sin(2 * theta)
    loop[1, 1], loop[1, 2] = c, -s
    loop[2, 1], loop[2, 2] = s, c
    return loop


# Lifts a discretized loop in SO(3) to a continuous path of unit quaternions,
# choosing at each sample the sign of q closest to its predecessor
def lift_loop_to_s3(samples, tol: float = ORTHOGONALITY_TOL) -> LoopLift:
    # attitude depends on this module for parity
    from .attitude import quat_from_rotation, rotation_angle

    rotations = [as_matrix_of_order(sample, 3, name="loop sample") for sample in samples]
    if not rotations:
        raise UsageException("Cannot lift an empty loop")
    for idx, rotation in enumerate(rotations):
        if parity(rotation, tol) < 0:
            raise DomainException(f"Sample {idx} has parity -1 and is not in the image of Phi")
    for idx in range(1, len(rotations)):
        gap = rotation_angle(rotations[idx - 1], rotations[idx])
        if gap > LIFT_MAX_STEP:
            raise ResolutionException(
                f"Samples {idx - 1} and {idx} are {gap:.3f} rad apart (limit {LIFT_MAX_STEP})"
            )

    lift = [quat_from_rotation(rotations[0], tol)]
    for idx, rotation in enumerate(rotations[1:], 1):
        q = quat_from_rotation(rotation, tol)
        previous = lift[-1].as_array()
        if np.linalg.norm(q.as_array() - previous) >= np.linalg.norm(q.as_array() + previous):
            logger.debug(f"Flipping lift sign at sample {idx}")
            q = -q
        lift.append(q)
    return LoopLift(tuple(lift))


# Deformation of an invertible M onto its orthogonal QR factor:
# M(t) = Q R(t), R(t) with diagonal r_ii^(1 - t) and strict upper part
# (1 - t) r_ij
def qr_retraction_path(matrix, t: float) -> np.ndarray:
    if not 0.0 <= t <= 1.0:
        raise UsageException(f"Retraction parameter must lie in [0, 1], got {t}")
    factors = qr_givens(matrix)
    if factors.is_singular:
        raise DomainException("QR retraction needs an invertible matrix")
    r = factors.R
    diagonal = np.diag(r) ** (1.0 - t)
    deformed = (1.0 - t) * np.triu(r, 1) + np.diag(diagonal)
    return factors.Q @ deformed
