#!/usr/bin/env python3
#
# orthogonalizer_landis.py
#
# Orthogonalizes a perturbed 3x3 rotation through a Landis column, with no
# square root unless rows are rescaled
#
# MIT License - see LICENSE
from logging import getLogger

import numpy as np

from ...attitude import orthogonalize_rational
from .orthogonalizer import IncompatibleOrthogonalizerException, Orthogonalizer

logger = getLogger(__name__)


class OrthogonalizerLandis(Orthogonalizer):
    NAME = "landis"

    def __init__(self, matrix, rescale_rows: bool = False) -> None:
        super().__init__(matrix, rescale_rows)
        if self.order != 3:
            raise IncompatibleOrthogonalizerException(
                f"Landis orthogonalization needs a 3x3 matrix, got order {self.order}"
            )

    def orthogonalize(self) -> np.ndarray:
        return orthogonalize_rational(self._matrix, rescale_rows=self.rescale_rows)
