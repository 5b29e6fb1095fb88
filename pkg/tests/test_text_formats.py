#!/usr/bin/env python3
#
# test_text_formats.py
#
# MIT License - see LICENSE
import io
import sys
from logging import WARNING

import numpy as np
import pytest
from numpy.testing import assert_allclose

from orthoframe.linalg import DomainException, Quaternion, TextFormatException
from orthoframe.linalg.utils.text_formats import (
    format_matrix,
    format_number,
    format_row,
    parse_matrix_text,
    parse_quaternion_text,
    parse_wahba_text,
    read_input,
)

WAHBA_TEXT = """\
# weight  reference  observation
1.0  1 0 0   0 1 0
2.0  0 1 0  -1 0 0   # quarter turn about z

0.5  0 0 1   0 0 1
"""


def test_parse_matrix_text():
    matrix = parse_matrix_text("1 2 3\n\n# comment\n4 5 6  # trailing\n")
    assert np.array_equal(matrix, [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])
    assert np.array_equal(parse_matrix_text("1e-3 -2.5E2"), [[1e-3, -250.0]])


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("# only a comment\n\n", "empty"),
        ("1 2\n3\n", "Line 2"),
        ("1 two\n", "'two'"),
        ("1 nan\n", "not finite"),
        ("inf 1\n", "not finite"),
    ],
)
def test_parse_matrix_text_errors(text, message):
    with pytest.raises(TextFormatException, match=message):
        parse_matrix_text(text)


def test_parse_wahba_text():
    problem = parse_wahba_text(WAHBA_TEXT)
    assert len(problem) == 3
    assert np.array_equal(problem.weights, [1.0, 2.0, 0.5])
    assert np.array_equal(problem.references, np.eye(3))
    assert np.array_equal(problem.observations[1], [-1.0, 0.0, 0.0])


def test_parse_wahba_text_normalizes_with_warning(caplog):
    with caplog.at_level(WARNING):
        problem = parse_wahba_text("1 2 0 0 1 0 0\n1 0 1 0 0 3 4\n")
    assert_allclose(problem.references[0], [1.0, 0.0, 0.0], atol=0)
    assert_allclose(problem.observations[1], [0.0, 0.6, 0.8], atol=1e-15)
    assert "normalizing reference vector" in caplog.text
    assert "normalizing observation vector" in caplog.text


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("1 1 0 0 1 0\n", "expected 7 fields"),
        ("0 1 0 0 1 0 0\n1 0 1 0 0 1 0\n", "weight must be positive"),
        ("-1 1 0 0 1 0 0\n1 0 1 0 0 1 0\n", "weight must be positive"),
        ("1 0 0 0 1 0 0\n1 0 1 0 0 1 0\n", "reference vector is zero"),
        ("1 1 0 0 x 0 0\n", "'x'"),
    ],
)
def test_parse_wahba_text_errors(text, message):
    with pytest.raises(TextFormatException, match=message):
        parse_wahba_text(text)


# Well-formed text can still describe an invalid problem
def test_parse_wahba_text_domain_errors():
    with pytest.raises(DomainException):
        parse_wahba_text("1 1 0 0 1 0 0\n")
    with pytest.raises(DomainException, match="collinear"):
        parse_wahba_text("1 1 0 0 1 0 0\n1 -1 0 0 0 1 0\n")


def test_parse_quaternion_text():
    assert parse_quaternion_text("1 0 0 0\n") == Quaternion(1.0)
    assert parse_quaternion_text("0.5 0.5\n0.5 0.5  # split\n") == Quaternion(0.5, 0.5, 0.5, 0.5)
    with pytest.raises(TextFormatException, match="4 reals, got 3"):
        parse_quaternion_text("1 0 0")


def test_read_input(tmp_path, monkeypatch):
    path = tmp_path / "matrix.txt"
    path.write_text("1 0\n0 1\n")
    assert read_input(str(path)) == "1 0\n0 1\n"
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 1\n1 0\n"))
    assert read_input("-") == "0 1\n1 0\n"
    with pytest.raises(TextFormatException, match="Could not read"):
        read_input(str(tmp_path / "missing.txt"))


def test_read_input_rejects_invalid_utf8(tmp_path, monkeypatch):
    monkeypatch.setattr(
        sys, "stdin", io.TextIOWrapper(io.BytesIO(b"1 0 0 0\xff\n"), encoding="utf-8")
    )
    with pytest.raises(TextFormatException, match="Could not read stdin"):
        read_input("-")
    path = tmp_path / "binary.txt"
    path.write_bytes(b"\xff\xfe\n")
    with pytest.raises(TextFormatException, match="Could not read"):
        read_input(str(path))


def test_format_number():
    assert format_number(3.0) == "3"
    assert format_number(1 / 3) == "0.333333"
    assert format_number(-0.0) == "0"
    assert format_number(0.1, exact=True) == "0.10000000000000001"
    assert float(format_number(np.pi, exact=True)) == np.pi


def test_format_rows_and_matrices():
    assert format_row(Quaternion(1.0, -0.5, 0.0, 2.0)) == "1 -0.5 0 2"
    assert format_matrix(np.eye(2)) == ["1 0", "0 1"]
    assert format_matrix(np.array([1.0, 3.0])) == ["1 3"]
