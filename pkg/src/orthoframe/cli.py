#!/usr/bin/env python3
#
# cli.py
#
# Command-line front end for orthoframe: quaternion <-> rotation conversion,
# orthogonalization, Wahba solving, parity classification and factorizations
# over plain-text matrix and observation files
#
# Output goes to stdout and is deterministic; logs and errors go to stderr.
# Exit codes: 0 success, 2 unreadable or malformed input, 3 domain or
# numerical failure
#
# MIT License - see LICENSE
import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from logging import DEBUG, WARNING, basicConfig, getLogger

import numpy as np

from orthoframe._version import __version__
from orthoframe.linalg import (
    LinalgException,
    TextFormatException,
    jacobi_eigendecomposition,
    normalize,
    nrmsq,
    phi_so3,
    polar_decompose,
    qr_givens,
    quat_from_rotation,
    reduce_to_canonical,
    solve_wahba_davenport,
    solve_wahba_svd,
    svd_via_polar,
    wahba_loss,
)
from orthoframe.linalg.utils.orthogonalizers import SUPPORTED_ORTHOGONALIZERS
from orthoframe.linalg.utils.text_formats import (
    OFF_UNIT_WARN_TOL,
    STDIN_PATH,
    format_matrix,
    format_number,
    format_row,
    parse_matrix_text,
    parse_quaternion_text,
    parse_wahba_text,
    read_input,
)

logger = getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FORMAT_ERROR = 2
EXIT_DOMAIN_ERROR = 3

# Fixture matrices are commonly printed to four decimals, so m2q accepts
# matrices orthogonal to this tolerance unless --tol is given
M2Q_TOL = 1e-3
PARITY_TOL = 1e-6

WAHBA_METHODS = ("davenport", "svd")
FACTOR_KINDS = ("qr", "polar", "svd", "jacobi")


def positive_float(value: str) -> float:
    try:
        number = float(value)
    except ValueError:
        raise ArgumentTypeError(f"{value!r} is not a real number")
    if not number > 0.0 or not np.isfinite(number):
        raise ArgumentTypeError(f"{value!r} must be a positive finite real")
    return number


def non_negative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise ArgumentTypeError(f"{value!r} is not an integer")
    if number < 0:
        raise ArgumentTypeError(f"{value!r} must not be negative")
    return number


# Parses arguments
def parse_args(argv: list[str] | None = None) -> Namespace:
    ap = ArgumentParser(prog="orthoframe")
    ap.add_argument(
        "-v", "--version", action="version", version=f"%(prog)s {__version__}"
    )
    ap.add_argument("-d", "--debug", action="store_true", help="Enable debug logging")
    ap.add_argument(
        "--exact",
        action="store_true",
        help="Print numbers with 17 significant digits instead of 6",
    )
    ap.add_argument(
        "--report",
        action="store_true",
        help="Append the residual of the computed result to the output",
    )
    ap.add_argument(
        "--tol",
        type=positive_float,
        default=None,
        help=f"Override the subcommand tolerance (orthogonality for convert m2q, default {M2Q_TOL}, and parity, default {PARITY_TOL}; convergence for factor --kind jacobi)",
    )
    subparsers = ap.add_subparsers(dest="command", required=True)
    input_help = f"Input file path, or {STDIN_PATH} to read stdin"

    convert = subparsers.add_parser(
        "convert", help="Convert a quaternion to a rotation matrix or back"
    )
    convert.add_argument("direction", choices=("q2m", "m2q"))
    convert.add_argument("input", help=input_help)

    orthogonalize = subparsers.add_parser(
        "orthogonalize", help="Carry a nearly orthogonal matrix onto an orthogonal one"
    )
    orthogonalize.add_argument("input", help=input_help)
    orthogonalize.add_argument(
        "-m",
        "--method",
        choices=tuple(SUPPORTED_ORTHOGONALIZERS),
        default="landis",
        help="Orthogonalization method (landis needs a 3x3 matrix)",
    )
    orthogonalize.add_argument(
        "--rescale-rows",
        action="store_true",
        help="Rescale rows of the Landis result to unit norm",
    )

    wahba = subparsers.add_parser(
        "wahba", help="Solve a Wahba problem from weighted vector observations"
    )
    wahba.add_argument("input", help=input_help)
    wahba.add_argument("-m", "--method", choices=WAHBA_METHODS, default="davenport")

    parity = subparsers.add_parser(
        "parity", help="Classify an orthogonal matrix as parity +1 or -1"
    )
    parity.add_argument("input", help=input_help)
    parity.add_argument(
        "--path",
        type=non_negative_int,
        default=0,
        metavar="N",
        help="Also print N evenly spaced samples of the reducing Givens path",
    )

    factor = subparsers.add_parser("factor", help="Factor a square matrix")
    factor.add_argument("input", help=input_help)
    factor.add_argument("-k", "--kind", choices=FACTOR_KINDS, required=True)
    return ap.parse_args(argv)


def _labelled(label: str, matrix, exact: bool) -> list[str]:
    return [label, *format_matrix(matrix, exact)]


def _residual_line(value: float, exact: bool) -> str:
    return f"residual {format_number(value, exact)}"


def cmd_convert(args: Namespace) -> list[str]:
    text = read_input(args.input)
    if args.direction == "q2m":
        q = parse_quaternion_text(text)
        if abs(nrmsq(q) - 1.0) > OFF_UNIT_WARN_TOL:
            logger.warning(f"Normalizing quaternion with nrmsq {nrmsq(q):.9g}")
        rotation = phi_so3(normalize(q))
        return format_matrix(rotation, args.exact)

    matrix = parse_matrix_text(text)
    q = quat_from_rotation(matrix, tol=args.tol or M2Q_TOL)
    lines = [format_row(q, args.exact)]
    if args.report:
        lines.append(_residual_line(np.linalg.norm(phi_so3(q) - matrix), args.exact))
    return lines


def cmd_orthogonalize(args: Namespace) -> list[str]:
    matrix = parse_matrix_text(read_input(args.input))
    orthogonalizer = SUPPORTED_ORTHOGONALIZERS[args.method](
        matrix, rescale_rows=args.rescale_rows
    )
    result = orthogonalizer.orthogonalize()
    lines = format_matrix(result, args.exact)
    if args.report:
        lines.append(_residual_line(orthogonalizer.residual(result), args.exact))
    return lines


def cmd_wahba(args: Namespace) -> list[str]:
    problem = parse_wahba_text(read_input(args.input))
    logger.debug(f"Solving a Wahba problem with {len(problem)} observations")
    if args.method == "davenport":
        q = solve_wahba_davenport(problem)
        attitude = phi_so3(q)
        lines = [format_row(q, args.exact)]
    else:
        attitude = solve_wahba_svd(problem)
        lines = format_matrix(attitude, args.exact)
    lines.append(f"loss {format_number(wahba_loss(attitude, problem), args.exact)}")
    return lines


def cmd_parity(args: Namespace) -> list[str]:
    matrix = parse_matrix_text(read_input(args.input))
    path, parity_sign = reduce_to_canonical(matrix, tol=args.tol or PARITY_TOL)
    lines = [f"{parity_sign:+d}"]
    samples = args.path
    for k in range(samples):
        tau = k / (samples - 1) if samples > 1 else 0.0
        lines.append(f"tau {format_number(tau, args.exact)}")
        lines.extend(format_matrix(path.sample(tau), args.exact))
    if args.report:
        target = np.eye(path.order)
        target[-1, -1] = parity_sign
        lines.append(_residual_line(np.linalg.norm(path.endpoint - target), args.exact))
    return lines


def cmd_factor(args: Namespace) -> list[str]:
    matrix = parse_matrix_text(read_input(args.input))
    exact = args.exact
    if args.kind == "qr":
        factors = qr_givens(matrix)
        lines = _labelled("Q", factors.Q, exact) + _labelled("R", factors.R, exact)
        reconstruction = factors.Q @ factors.R
    elif args.kind == "polar":
        factors = polar_decompose(matrix)
        lines = (
            _labelled("R", factors.R, exact)
            + _labelled("P", factors.P, exact)
            + _labelled("X", factors.X, exact)
        )
        reconstruction = factors.R @ factors.P
    elif args.kind == "svd":
        factors = svd_via_polar(matrix)
        lines = (
            _labelled("W", factors.W, exact)
            + _labelled("Gamma", factors.Gamma, exact)
            + _labelled("V", factors.V, exact)
        )
        reconstruction = factors.reconstruct()
    else:
        factors = jacobi_eigendecomposition(matrix, tol=args.tol)
        lines = _labelled("eigenvalues", factors.D, exact) + _labelled(
            "U", factors.U, exact
        )
        reconstruction = factors.reconstruct()
    if args.report:
        lines.append(_residual_line(np.linalg.norm(reconstruction - matrix), exact))
    return lines


COMMANDS = {
    "convert": cmd_convert,
    "orthogonalize": cmd_orthogonalize,
    "wahba": cmd_wahba,
    "parity": cmd_parity,
    "factor": cmd_factor,
}


def main(argv: list[str] | None = None) -> int:
    parsed_args = parse_args(argv)
    basicConfig(
        level=DEBUG if parsed_args.debug else WARNING,
        format=f"%(levelname)s:%(name)s:{parsed_args.command}:%(message)s",
    )

    try:
        lines = COMMANDS[parsed_args.command](parsed_args)
    except TextFormatException as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT_ERROR
    except LinalgException as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR

    print("\n".join(lines))
    return EXIT_SUCCESS


if __name__ == "__main__":
    raise SystemExit(main())
