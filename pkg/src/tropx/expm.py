"""The tropical matrix exponential and its structural identities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import ReducibleMatrixError
from .matrices import TropMatrix
from .scalars import Scalar, scalar_exp, trop_factorial


@dataclass(frozen=True)
class ExpResult:
    """e^(A) together with the indices describing the series run.

    order_bound is the classical heuristic O(A); stop_index is the index
    at which further terms provably cannot change the sum, which can
    exceed O(A) when an entry first becomes finite on a path longer than
    O(A); terms_used is the last index that actually changed the sum."""

    matrix: TropMatrix
    terms_used: int
    order_bound: int
    stop_index: int


def mat_exp(a: TropMatrix) -> ExpResult:
    """I oplus the series sum_{k>=1} (-k(k+1)/2) otimes A^(k).

    A^(k) is accumulated incrementally, one multiplication per term, and
    the loop stops once no later term can contribute: past k = n - 1 the
    finite support of the sum is final (every walk contains a simple path
    of length < n), and once the per-entry upper bound
    k * a_max - k(k+1)/2 drops below the smallest finite entry of the
    accumulator, every later term is entrywise dominated."""
    from .scalars import EPSILON

    a.require_square()
    n = a.rows
    t = a.order_bound()
    acc = TropMatrix.identity(n)
    a_max = a.max_entry()
    if a_max is EPSILON:
        return ExpResult(matrix=acc, terms_used=0, order_bound=t, stop_index=0)
    power = acc
    terms_used = 0
    k = 0
    while True:
        k += 1
        power = power.otimes(a)
        term = power.scalar_mul(-trop_factorial(k))
        nxt = acc.oplus(term)
        if nxt != acc:
            terms_used = k
            acc = nxt
        if k < max(t, n - 1):
            continue
        floor = min(
            v for row in acc.entries() for v in row if v is not EPSILON
        )
        if (k + 1) * a_max - trop_factorial(k + 1) < floor:
            break
    return ExpResult(matrix=acc, terms_used=terms_used, order_bound=t, stop_index=k)


def partial_exp(a: TropMatrix, terms: int) -> TropMatrix:
    """Partial sum of the exponential series up to a given term count."""
    a.require_square()
    acc = TropMatrix.identity(a.rows)
    power = acc
    for k in range(1, terms + 1):
        power = power.otimes(a)
        acc = acc.oplus(power.scalar_mul(-trop_factorial(k)))
    return acc


def exp_eigenvalue_check(a: TropMatrix) -> Tuple[Scalar, Scalar]:
    """Both sides of lambda(e^(A)) = e^(lambda(A)), computed independently:
    Karp on e^(A) versus the scalar exponential of Karp on A."""
    from .graphs import is_irreducible, max_cycle_mean

    a.require_square()
    if not is_irreducible(a):
        raise ReducibleMatrixError("the eigenvalue identity requires an irreducible matrix")
    lhs = max_cycle_mean(mat_exp(a).matrix)
    rhs = scalar_exp(max_cycle_mean(a))
    return lhs, rhs
