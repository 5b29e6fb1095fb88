#!/usr/bin/env python3
#
# __init__.py
#
# MIT License - see LICENSE
from .attitude import (
    AttitudeProfile,
    WahbaProblem,
    attitude_profile,
    itzhak,
    landis,
    landis_denominator,
    orthogonalize_rational,
    quat_from_rotation,
    rotation_angle,
    solve_wahba_davenport,
    solve_wahba_svd,
    wahba_gain,
    wahba_loss,
)
from .linalg_exception import (
    AmbiguityException,
    ConvergenceException,
    DomainException,
    LinalgException,
    ResolutionException,
    TextFormatException,
    UsageException,
)
from .polar import (
    PolarFactors,
    SVDFactors,
    matrix_exp_sym,
    matrix_log_series,
    matrix_log_spd,
    polar_decompose,
    polar_retraction_path,
    svd_via_polar,
)
from .quat import (
    Quaternion,
    conjq,
    normalize,
    nrmsq,
    phi_so3,
    qinv,
    qprod,
    rodrigues_apply,
)
from .spectral import (
    SpectralFactors,
    is_positive_definite,
    jacobi_eigendecomposition,
    jacobi_rotation_angle,
    jacobi_rotation_angle_ivt,
    min_eigenpair,
    offdiag_energy,
    sqrt_spd,
)
from .stiefel import (
    Frame,
    GivensPath,
    GivensStep,
    LoopLift,
    QRFactors,
    apply_givens,
    complete_frame,
    drop_last,
    givens_coeffs,
    givens_loop,
    gram_schmidt,
    lift_loop_to_s3,
    parity,
    qr_givens,
    qr_retraction_path,
    reduce_to_canonical,
)

__all__ = [
    AttitudeProfile,
    WahbaProblem,
    attitude_profile,
    itzhak,
    landis,
    landis_denominator,
    orthogonalize_rational,
    quat_from_rotation,
    rotation_angle,
    solve_wahba_davenport,
    solve_wahba_svd,
    wahba_gain,
    wahba_loss,
    AmbiguityException,
    ConvergenceException,
    DomainException,
    LinalgException,
    ResolutionException,
    TextFormatException,
    UsageException,
    PolarFactors,
    SVDFactors,
    matrix_exp_sym,
    matrix_log_series,
    matrix_log_spd,
    polar_decompose,
    polar_retraction_path,
    svd_via_polar,
    Quaternion,
    conjq,
    normalize,
    nrmsq,
    phi_so3,
    qinv,
    qprod,
    rodrigues_apply,
    SpectralFactors,
    is_positive_definite,
    jacobi_eigendecomposition,
    jacobi_rotation_angle,
    jacobi_rotation_angle_ivt,
    min_eigenpair,
    offdiag_energy,
    sqrt_spd,
    Frame,
    GivensPath,
    GivensStep,
    LoopLift,
    QRFactors,
    apply_givens,
    complete_frame,
    drop_last,
    givens_coeffs,
    givens_loop,
    gram_schmidt,
    lift_loop_to_s3,
    parity,
    qr_givens,
    qr_retraction_path,
    reduce_to_canonical,
]
