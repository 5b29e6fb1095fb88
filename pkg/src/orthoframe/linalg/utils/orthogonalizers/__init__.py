#!/usr/bin/env python3
#
# __init__.py
#
# MIT License - see LICENSE
from .orthogonalizer import IncompatibleOrthogonalizerException, Orthogonalizer
from .orthogonalizer_landis import OrthogonalizerLandis
from .orthogonalizer_polar import OrthogonalizerPolar
from .orthogonalizer_svd import OrthogonalizerSVD

__all__ = [
    Orthogonalizer,
    IncompatibleOrthogonalizerException,
    OrthogonalizerLandis,
    OrthogonalizerPolar,
    OrthogonalizerSVD,
]

SUPPORTED_ORTHOGONALIZERS = {
    orthogonalizer.NAME: orthogonalizer
    for orthogonalizer in (OrthogonalizerLandis, OrthogonalizerPolar, OrthogonalizerSVD)
}
