#!/usr/bin/env python3
#
# linalg_exception.py
#
# Custom Exception classes for frame, rotation and factorization operations
#
# MIT License - see LICENSE


class LinalgException(Exception):
    pass


# Input lies outside the domain of an operation, e.g. a singular matrix passed
# to a polar decomposition or a reflection passed where a rotation is required
class DomainException(LinalgException):
    pass


# The caller broke an operation's contract (bad index, shape or parameter)
class UsageException(LinalgException):
    pass


class ConvergenceException(LinalgException):
    pass


# The requested answer is not unique, e.g. a repeated maximal eigenvalue
class AmbiguityException(LinalgException):
    pass


# A discretized path is sampled too coarsely to be lifted
class ResolutionException(LinalgException):
    pass


# MatrixFile/WahbaFile text could not be parsed
class TextFormatException(LinalgException):
    pass
