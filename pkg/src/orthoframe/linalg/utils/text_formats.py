#!/usr/bin/env python3
#
# text_formats.py
#
# Provides parsing of the plain-text matrix, Wahba observation and
# quaternion-literal inputs, and deterministic number formatting for output
#
# MatrixFile: one matrix row per line, whitespace-separated reals
# WahbaFile: one `weight r1 r2 r3 o1 o2 o3` observation per line
# Blank lines and anything after `#` are ignored in both
#
# MIT License - see LICENSE
import sys
from logging import getLogger

import numpy as np

from ..attitude import WahbaProblem
from ..linalg_exception import TextFormatException
from ..quat import Quaternion

logger = getLogger(__name__)

STDIN_PATH = "-"
WAHBA_FIELDS = 7
# Wahba vectors further than this from unit length draw a warning on ingest
OFF_UNIT_WARN_TOL = 1e-6
SHORT_FORMAT = ".6g"
EXACT_FORMAT = ".17g"


# Reads the raw text of a file path, or of stdin for "-"
def read_input(path: str) -> str:
    if path == STDIN_PATH:
        try:
            return sys.stdin.read()
        except (OSError, UnicodeDecodeError) as e:
            raise TextFormatException(f"Could not read stdin: {e}") from e
    try:
        with open(path, encoding="utf-8") as fp:
            return fp.read()
    except (OSError, UnicodeDecodeError) as e:
        raise TextFormatException(f"Could not read {path}: {e}") from e


# Yields (line number, fields) for each line that carries data
def _data_lines(text: str):
    for line_number, line in enumerate(text.splitlines(), 1):
        fields = line.split("#", 1)[0].split()
        if fields:
            yield line_number, fields


def _parse_reals(fields: list[str], line_number: int) -> list[float]:
    values = []
    for field in fields:
        try:
            value = float(field)
        except ValueError:
            raise TextFormatException(f"Line {line_number}: {field!r} is not a real number")
        if not np.isfinite(value):
            raise TextFormatException(f"Line {line_number}: {field!r} is not finite")
        values.append(value)
    return values


def parse_matrix_text(text: str) -> np.ndarray:
    rows = []
    for line_number, fields in _data_lines(text):
        row = _parse_reals(fields, line_number)
        if rows and len(row) != len(rows[0]):
            raise TextFormatException(
                f"Line {line_number}: expected {len(rows[0])} entries, got {len(row)}"
            )
        rows.append(row)
    if not rows:
        raise TextFormatException("Matrix input is empty")
    return np.array(rows)


# Parses a WahbaFile, normalizing vectors onto the unit sphere
def parse_wahba_text(text: str) -> WahbaProblem:
    weights, references, observations = [], [], []
    for line_number, fields in _data_lines(text):
        if len(fields) != WAHBA_FIELDS:
            raise TextFormatException(
                f"Line {line_number}: expected {WAHBA_FIELDS} fields (weight r1 r2 r3 o1 o2 o3), got {len(fields)}"
            )
        values = _parse_reals(fields, line_number)
        if values[0] <= 0.0:
            raise TextFormatException(f"Line {line_number}: weight must be positive, got {values[0]}")
        weights.append(values[0])
        references.append(_unit(np.array(values[1:4]), "reference", line_number))
        observations.append(_unit(np.array(values[4:7]), "observation", line_number))
    if not weights:
        raise TextFormatException("Wahba input is empty")
    return WahbaProblem(weights, references, observations)


def _unit(vector: np.ndarray, label: str, line_number: int) -> np.ndarray:
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        raise TextFormatException(f"Line {line_number}: {label} vector is zero")
    if abs(norm - 1.0) > OFF_UNIT_WARN_TOL:
        logger.warning(f"Line {line_number}: normalizing {label} vector of length {norm:.9g}")
    return vector / norm


# Parses "x y z w" (scalar first), possibly spread over several lines
def parse_quaternion_text(text: str) -> Quaternion:
    values = []
    for line_number, fields in _data_lines(text):
        values.extend(_parse_reals(fields, line_number))
    if len(values) != 4:
        raise TextFormatException(f"Quaternion literal needs 4 reals, got {len(values)}")
    return Quaternion(*values)


# Adding 0.0 turns -0.0 into 0.0 so output never shows "-0"
def format_number(value: float, exact: bool = False) -> str:
    return format(float(value) + 0.0, EXACT_FORMAT if exact else SHORT_FORMAT)


def format_row(values, exact: bool = False) -> str:
    return " ".join(format_number(value, exact) for value in values)


def format_matrix(matrix, exact: bool = False) -> list[str]:
    return [format_row(row, exact) for row in np.atleast_2d(matrix)]
