#!/usr/bin/env python3
#
# orthogonalizer_svd.py
#
# Orthogonalizes a square matrix A = W diag(Gamma) V^T as W V^T, the nearest
# orthogonal matrix in the Frobenius norm
#
# MIT License - see LICENSE
from logging import getLogger

import numpy as np

from ...polar import svd_via_polar
from .orthogonalizer_polar import OrthogonalizerPolar

logger = getLogger(__name__)


class OrthogonalizerSVD(OrthogonalizerPolar):
    NAME = "svd"

    def orthogonalize(self) -> np.ndarray:
        factors = svd_via_polar(self._matrix)
        logger.debug(f"Singular values {factors.Gamma}")
        return factors.W @ factors.V.T
