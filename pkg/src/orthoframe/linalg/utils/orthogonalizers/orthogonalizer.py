#!/usr/bin/env python3
#
# orthogonalizer.py
#
# Provides a simple abstract base class for the methods that carry a nearly
# orthogonal matrix onto an orthogonal one
#
# MIT License - see LICENSE
from abc import ABC, abstractmethod
from logging import getLogger

import numpy as np

from ...linalg_exception import LinalgException
from ..matrix_utils import as_matrix

logger = getLogger(__name__)


# Custom Exception to denote that an orthogonalizer cannot accept an input
class IncompatibleOrthogonalizerException(LinalgException):
    pass


class Orthogonalizer(ABC):
    # Name used to select the method on the command line
    NAME: str = None

    def __init__(self, matrix, rescale_rows: bool = False) -> None:
        self._matrix = as_matrix(matrix, name="S")
        self.rescale_rows = rescale_rows

    @property
    def order(self) -> int:
        return self._matrix.shape[0]

    # Abstract method returning the orthogonal matrix computed from the input
    @abstractmethod
    def orthogonalize(self) -> np.ndarray:
        pass

    # Frobenius distance between a result and the input
    def residual(self, result: np.ndarray) -> float:
        return float(np.linalg.norm(result - self._matrix))
