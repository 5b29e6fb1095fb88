#!/usr/bin/env python3
#
# orthogonalizer_polar.py
#
# Orthogonalizes a square matrix by taking the orthogonal factor R of its
# polar form A = R P
#
# MIT License - see LICENSE
from logging import getLogger

import numpy as np

from ...polar import polar_decompose
from .orthogonalizer import IncompatibleOrthogonalizerException, Orthogonalizer

logger = getLogger(__name__)


class OrthogonalizerPolar(Orthogonalizer):
    NAME = "polar"

    def __init__(self, matrix, rescale_rows: bool = False) -> None:
        super().__init__(matrix, rescale_rows)
        if rescale_rows:
            raise IncompatibleOrthogonalizerException(
                f"Row rescaling only applies to Landis orthogonalization, not {self.NAME}"
            )

    def orthogonalize(self) -> np.ndarray:
        return polar_decompose(self._matrix).R
