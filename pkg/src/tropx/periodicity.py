"""Ultimate periodicity, robustness, generalized eigenvectors, orbits,
and the sufficient criterion for the exponential to be robust."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import CapExceededError, DomainError, ReducibleMatrixError
from .expm import mat_exp
from .graphs import critical_graph, is_irreducible, max_cycle_mean
from .matrices import TropMatrix
from .scalars import EPSILON, Scalar, format_scalar


def default_cap(n: int) -> int:
    return 4 * n * n + 64


def _require_irreducible(a: TropMatrix, allow_reducible: bool = False) -> None:
    a.require_square()
    if not allow_reducible and not is_irreducible(a):
        raise ReducibleMatrixError("operation requires an irreducible matrix")


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Witness for A^(k+p) = lambda^(p) otimes A^(k), k >= k0, with p
    minimal and, for that p, k0 minimal."""

    period: int
    transient: int
    lam: Scalar
    witness_equal: bool

    def to_json_dict(self) -> dict:
        return {
            "p": self.period,
            "k0": self.transient,
            "lambda": format_scalar(self.lam),
        }


def ultimate_period(
    a: TropMatrix, cap: Optional[int] = None, *, allow_reducible: bool = False
) -> PeriodicityCertificate:
    """Minimal period and transient of the normalized power sequence.

    Iterates B^(k) with B = (-lambda) otimes A and detects the first
    repeated matrix; for a deterministic iteration the first repeat gives
    both the minimal period and the minimal transient.

    allow_reducible admits block cases (e.g. tropical permutation
    matrices) whose normalized powers still cycle; the search then simply
    runs out of cap when they do not."""
    _require_irreducible(a, allow_reducible)
    if cap is None:
        cap = default_cap(a.rows)
    if cap <= 0:
        raise DomainError("cap must be positive")
    lam = max_cycle_mean(a)
    if lam is EPSILON:
        raise DomainError("acyclic matrix has no normalized power sequence")
    b = a.scalar_mul(-lam)
    seen = {}
    power = b
    k = 1
    while k <= cap:
        if power in seen:
            k0 = seen[power]
            p = k - k0
            witness = a.power(k0 + p) == a.power(k0).scalar_mul(p * lam)
            return PeriodicityCertificate(
                period=p, transient=k0, lam=lam, witness_equal=witness
            )
        seen[power] = k
        power = power.otimes(b)
        k += 1
    raise CapExceededError(cap, k - 1)


def is_robust(a: TropMatrix) -> bool:
    """Robust iff the period is 1; computed via the cyclicity formula."""
    _require_irreducible(a)
    return critical_graph(a).period == 1


def is_quasi_robust(
    a: TropMatrix, cap: Optional[int] = None, *, allow_reducible: bool = False
) -> bool:
    """Quasi-robust iff the power sequence is ultimately periodic within
    the cap."""
    try:
        ultimate_period(a, cap, allow_reducible=allow_reducible)
        return True
    except CapExceededError:
        return False


def _vector_finite(x: TropMatrix) -> bool:
    return any(v is not EPSILON for v in x.col(0))


def gen_eig_order(
    a: TropMatrix,
    x: TropMatrix,
    period: Optional[int] = None,
    *,
    allow_reducible: bool = False,
) -> Optional[int]:
    """Minimal m <= per(A) with A^(m) otimes x = lambda^(m) otimes x, or
    None when no such m exists up to the period."""
    _require_irreducible(a, allow_reducible)
    if not _vector_finite(x):
        raise DomainError("the all-epsilon vector has no generalized-eigenvector order")
    if period is None:
        period = critical_graph(a).period
    lam = max_cycle_mean(a)
    acc = x
    for m in range(1, period + 1):
        acc = a.otimes(acc)
        if acc == x.scalar_mul(m * lam):
            return m
    return None


@dataclass(frozen=True)
class GenEigRecord:
    vector: TropMatrix
    order: Optional[int]
    lam: Scalar


@dataclass(frozen=True)
class ExpColumnsReport:
    """Per-column generalized-eigenvector check for e^(A), plus whether
    the theorem's hypothesis (diagonal >= 1 and strict periodicity, or a
    long enough series) actually held."""

    records: Tuple[GenEigRecord, ...]
    hypothesis_met: bool
    reasons: Tuple[str, ...]


def exp_columns_gen_eig(a: TropMatrix, cap: Optional[int] = None) -> ExpColumnsReport:
    """Check every column of e^(A) for a finite generalized-eigenvector
    order.  Reports (rather than silently assumes) failures of the
    hypothesis: all a_ii >= 1, and strictly periodic or
    Sper(A) + 2 per(A) < O(A)."""
    _require_irreducible(a)
    cert = ultimate_period(a, cap)
    reasons = []
    diag_ok = all(
        a[i, i] is not EPSILON and a[i, i] >= 1 for i in range(a.rows)
    )
    if not diag_ok:
        reasons.append("some diagonal entry is below 1")
    strictly_periodic = cert.transient <= 1
    series_long = cert.transient + 2 * cert.period < a.order_bound()
    if not (strictly_periodic or series_long):
        reasons.append(
            "matrix is neither strictly periodic nor has Sper + 2 per < O(A)"
        )
    e = mat_exp(a).matrix
    lam = max_cycle_mean(a)
    records = tuple(
        GenEigRecord(
            vector=e.col_matrix(j),
            order=gen_eig_order(a, e.col_matrix(j), period=cert.period),
            lam=lam,
        )
        for j in range(e.cols)
    )
    return ExpColumnsReport(
        records=records,
        hypothesis_met=not reasons,
        reasons=tuple(reasons),
    )


@dataclass(frozen=True)
class OrbitReport:
    """States x(0..r) of the orbit x(r+1) = A otimes x(r), and where (if
    anywhere) it enters the generalized-eigenvector set."""

    states: Tuple[TropMatrix, ...]
    entry_index: Optional[int]
    entry_order: Optional[int]
    stable: bool

    def to_json_dict(self, include_states: bool = False) -> dict:
        out = {
            "entry": self.entry_index,
            "order": self.entry_order,
            "stable": self.stable,
        }
        if include_states:
            out["states"] = [
                [format_scalar(v) for v in s.col(0)] for s in self.states
            ]
        return out


def orbit(a: TropMatrix, x0: TropMatrix, max_steps: int = 64) -> OrbitReport:
    """Iterate the orbit and find the first state with a finite
    generalized-eigenvector order."""
    _require_irreducible(a)
    if not _vector_finite(x0):
        raise DomainError("orbit requires a starting vector with a finite entry")
    if max_steps <= 0:
        raise DomainError("max_steps must be positive")
    period = critical_graph(a).period
    states = [x0]
    for r in range(max_steps + 1):
        order = gen_eig_order(a, states[r], period=period)
        if order is not None:
            return OrbitReport(
                states=tuple(states), entry_index=r, entry_order=order, stable=True
            )
        if r < max_steps:
            states.append(a.otimes(states[r]))
    return OrbitReport(
        states=tuple(states), entry_index=None, entry_order=None, stable=False
    )


def gen_orders_census(
    a: TropMatrix,
    samples: int = 16,
    cap: Optional[int] = None,
    seed: int = 0,
    *,
    allow_reducible: bool = False,
) -> set:
    """Observed generalized-eigenvector orders: columns of the powers
    A^(k0), ..., A^(k0+p-1) plus seeded random orbit tails."""
    import random

    _require_irreducible(a, allow_reducible)
    cert = ultimate_period(a, cap, allow_reducible=allow_reducible)
    orders = set()
    power = a.power(cert.transient)
    for _ in range(cert.period):
        for j in range(power.cols):
            m = gen_eig_order(
                a, power.col_matrix(j), period=cert.period, allow_reducible=allow_reducible
            )
            if m is not None:
                orders.add(m)
        power = power.otimes(a)
    rng = random.Random(seed)
    for _ in range(samples):
        x = TropMatrix.column([Fraction(rng.randint(-5, 5)) for _ in range(a.rows)])
        state = a.power(cert.transient).otimes(x)
        m = gen_eig_order(
            a, state, period=cert.period, allow_reducible=allow_reducible
        )
        if m is not None:
            orders.add(m)
    return orders


@dataclass(frozen=True)
class DivisibilityDetail:
    component_nodes: Tuple[int, ...]
    cycle_lengths: Tuple[int, ...]
    divides: bool


def exp_robustness_criterion(
    a: TropMatrix,
) -> Tuple[bool, Tuple[DivisibilityDetail, ...]]:
    """Sufficient condition for e^(A) to be robust: every strongly
    connected component of the critical graph contains a critical cycle
    whose length divides floor(lambda), or, for positive integer lambda,
    divides lambda or lambda - 1."""
    from .oracle import simple_cycle_lengths

    _require_irreducible(a)
    spec = critical_graph(a)
    lam = spec.lam
    if lam is EPSILON:
        return False, ()
    targets = []
    floor_lam = math.floor(lam)
    if floor_lam >= 1:
        targets.append(floor_lam)
    if lam > 0 and lam.denominator == 1:
        targets.extend([int(lam), int(lam) - 1])
    targets = [t for t in set(targets) if t >= 1]

    # group critical edges by critical component
    from .graphs import tarjan_scc, _adjacency

    comps = tarjan_scc(
        a.rows,
        _adjacency(a.rows, [(i, j, Fraction(0)) for i, j in spec.critical_edges]),
    )
    details = []
    ok = True
    for comp in sorted(comps, key=lambda c: c[0]):
        comp_set = set(comp)
        comp_edges = [
            (i, j) for i, j in spec.critical_edges if i in comp_set and j in comp_set
        ]
        if not comp_edges:
            continue
        lengths = simple_cycle_lengths(comp, comp_edges)
        divides = any(t % l == 0 for l in lengths for t in targets)
        details.append(
            DivisibilityDetail(
                component_nodes=tuple(comp),
                cycle_lengths=tuple(sorted(lengths)),
                divides=divides,
            )
        )
        ok = ok and divides
    return ok and bool(details), tuple(details)
