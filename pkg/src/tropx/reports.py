"""Report builders shared by the HTTP service and the CLI.

Each builder takes exact library objects, runs one analysis (optionally
cross-checked against the brute-force oracle), and returns a plain dict
ready for JSON serialization.  All user-facing node indices are 1-based.
"""

from __future__ import annotations

from typing import Optional

from .errors import DomainError, VerifyMismatchError
from .expm import exp_eigenvalue_check, mat_exp
from .graphs import critical_graph, max_cycle_mean
from .matrices import TropMatrix
from .oracle import brute_exp, brute_period, enum_cycle_mean
from .periodicity import (
    exp_robustness_criterion,
    gen_eig_order,
    is_robust,
    orbit,
    ultimate_period,
)
from .scalars import (
    Scalar,
    format_scalar,
    parse_scalar,
    scalar_exp,
    scalar_log,
)
from .spectral import eigenvectors


def _matrix_tokens(m: TropMatrix) -> list:
    return [[format_scalar(x) for x in row] for row in m.entries()]


def exp_report(a: TropMatrix, steps: bool = False, verify: bool = False) -> dict:
    res = mat_exp(a)
    if verify:
        reference = brute_exp(a, res.stop_index + res.order_bound)
        if reference != res.matrix:
            raise VerifyMismatchError(
                "mat_exp", _matrix_tokens(res.matrix), _matrix_tokens(reference)
            )
    out = {"matrix": _matrix_tokens(res.matrix)}
    if steps:
        out["order_bound"] = res.order_bound
        out["terms_used"] = res.terms_used
    return out


def spectrum_report(a: TropMatrix, verify: bool = False) -> dict:
    spec = critical_graph(a)
    if verify:
        mu, _ = enum_cycle_mean(a)
        if mu != spec.lam:
            raise VerifyMismatchError(
                "max_cycle_mean", format_scalar(spec.lam), format_scalar(mu)
            )
    return spec.to_json_dict()


def eig_report(a: TropMatrix, verify: bool = False) -> dict:
    basis = eigenvectors(a)
    if verify:
        for node, v in basis.vectors:
            if a.otimes(v) != v.scalar_mul(basis.eigenvalue):
                raise VerifyMismatchError(
                    "eigenvector", f"column of node {node + 1}", "A (x) v != lambda (x) v"
                )
    return basis.to_json_dict()


def period_report(a: TropMatrix, cap: Optional[int] = None, verify: bool = False) -> dict:
    cert = ultimate_period(a, cap)
    if verify:
        ref = brute_period(a, bound=max(64, cert.transient + 2 * cert.period))
        if ref != (cert.period, cert.transient):
            raise VerifyMismatchError(
                "ultimate_period", (cert.period, cert.transient), ref
            )
        gavalec = critical_graph(a).period
        if gavalec != cert.period:
            raise VerifyMismatchError("period (cyclicity formula)", cert.period, gavalec)
    out = cert.to_json_dict()
    out["robust"] = cert.period == 1
    return out


def robust_report(a: TropMatrix) -> dict:
    spec = critical_graph(a)
    sufficient, details = exp_robustness_criterion(a)
    return {
        "lambda": format_scalar(spec.lam),
        "period": spec.period,
        "robust": is_robust(a),
        "exp_robust_sufficient": sufficient,
        "divisibility": [
            {
                "component": [i + 1 for i in d.component_nodes],
                "cycle_lengths": list(d.cycle_lengths),
                "divides": d.divides,
            }
            for d in details
        ],
    }


def genorder_report(a: TropMatrix, x: TropMatrix, verify: bool = False) -> dict:
    order = gen_eig_order(a, x)
    lam = max_cycle_mean(a)
    if verify and order is not None:
        lhs = a.power(order).otimes(x)
        rhs = x.scalar_mul(order * lam)
        if lhs != rhs:
            raise VerifyMismatchError("gen_eig_order", order, "defining equation fails")
    return {"order": order, "lambda": format_scalar(lam)}


def orbit_report(
    a: TropMatrix, x0: TropMatrix, max_steps: int = 64, include_states: bool = False
) -> dict:
    return orbit(a, x0, max_steps).to_json_dict(include_states=include_states)


def scalar_report(op: str, token: str) -> dict:
    value = parse_scalar(token)
    if op == "exp":
        result = scalar_exp(value)
    elif op == "log":
        result = scalar_log(value)
    else:
        raise DomainError(f"unknown scalar operation {op!r} (use exp or log)")
    return {"input": format_scalar(value), "op": op, "result": format_scalar(result)}


def eigcheck_report(a: TropMatrix) -> dict:
    lhs, rhs = exp_eigenvalue_check(a)
    return {
        "lambda_of_exp": format_scalar(lhs),
        "exp_of_lambda": format_scalar(rhs),
        "equal": lhs == rhs,
    }
