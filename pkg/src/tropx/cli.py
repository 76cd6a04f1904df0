"""Command-line front end: a thin client over the report builders.

Exit codes: 0 success, 2 domain/parse errors, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reports
from .errors import TropicalError, VerifyMismatchError
from .matrices import TropMatrix, parse_matrix, parse_vector


def _read_matrix(path: str) -> TropMatrix:
    return parse_matrix(Path(path).read_text())


def _read_vector(path: str) -> TropMatrix:
    return TropMatrix.column(parse_vector(Path(path).read_text()))


def _print_grid(rows) -> None:
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    for r in rows:
        print("  ".join(tok.rjust(w) for tok, w in zip(r, widths)))


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    matrix = report.pop("matrix", None)
    if matrix:
        _print_grid(matrix)
    for key, value in report.items():
        print(f"{key}: {value}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropx",
        description="Max-plus matrix exponential, spectral and periodicity analysis",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("matrix", help="matrix file")
        p.add_argument("--verify", action="store_true", help="cross-check with the oracle")
        return p

    p_exp = matrix_cmd("exp", "tropical matrix exponential")
    p_exp.add_argument("--steps", action="store_true", help="report O(A) and terms used")
    matrix_cmd("spectrum", "eigenvalue, critical graph, cyclicities, period")
    matrix_cmd("eig", "eigenvectors from critical columns")
    p_period = matrix_cmd("period", "ultimate periodicity certificate")
    p_period.add_argument("--cap", type=int, default=None, help="power search budget")
    matrix_cmd("robust", "robustness and the exponential robustness criterion")

    p_gen = matrix_cmd("genorder", "generalized-eigenvector order of a vector")
    p_gen.add_argument("vector", help="vector file, one token per line")

    p_orbit = matrix_cmd("orbit", "orbit analysis of a starting vector")
    p_orbit.add_argument("vector", help="vector file, one token per line")
    p_orbit.add_argument("--max-steps", type=int, default=64)
    p_orbit.add_argument("--states", action="store_true", help="include orbit states")

    p_scalar = sub.add_parser("scalar", help="scalar exponential / logarithm")
    p_scalar.add_argument("op", choices=["exp", "log"])
    p_scalar.add_argument("value", help="scalar token")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "exp":
            report = reports.exp_report(
                _read_matrix(args.matrix), steps=args.steps, verify=args.verify
            )
        elif args.command == "spectrum":
            report = reports.spectrum_report(_read_matrix(args.matrix), verify=args.verify)
        elif args.command == "eig":
            report = reports.eig_report(_read_matrix(args.matrix), verify=args.verify)
        elif args.command == "period":
            report = reports.period_report(
                _read_matrix(args.matrix), cap=args.cap, verify=args.verify
            )
        elif args.command == "robust":
            report = reports.robust_report(_read_matrix(args.matrix))
        elif args.command == "genorder":
            report = reports.genorder_report(
                _read_matrix(args.matrix), _read_vector(args.vector), verify=args.verify
            )
        elif args.command == "orbit":
            report = reports.orbit_report(
                _read_matrix(args.matrix),
                _read_vector(args.vector),
                max_steps=args.max_steps,
                include_states=args.states,
            )
        elif args.command == "scalar":
            report = reports.scalar_report(args.op, args.value)
        else:  # pragma: no cover - argparse enforces the choices
            raise TropicalError(f"unknown command {args.command}")
    except VerifyMismatchError as exc:
        _fail(exc, args.json, kind="verify-mismatch")
        return 3
    except (TropicalError, OSError) as exc:
        _fail(exc, args.json, kind=type(exc).__name__)
        return 2
    _emit(report, args.json)
    return 0


def _fail(exc: Exception, as_json: bool, kind: str) -> None:
    if as_json:
        print(json.dumps({"error": kind, "detail": str(exc)}), file=sys.stderr)
    else:
        print(f"error ({kind}): {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
