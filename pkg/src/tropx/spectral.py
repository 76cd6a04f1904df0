"""Metric matrix, Kleene star, and eigenvectors from critical columns."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import DivergenceError, DomainError, ReducibleMatrixError
from .matrices import TropMatrix
from .scalars import EPSILON, Scalar, format_scalar


def metric_matrix(a: TropMatrix) -> TropMatrix:
    """Gamma(A) = A oplus A^(2) oplus ...: heaviest path weights over all
    lengths.  Converges iff the maximum cycle mean is <= 0.

    Computed by Floyd-Warshall relaxation; agrees bit-exactly with the
    n-term power accumulation."""
    from .graphs import max_cycle_mean

    a.require_square()
    mu = max_cycle_mean(a)
    if mu is not EPSILON and mu > 0:
        raise DivergenceError(mu)
    n = a.rows
    g = [list(row) for row in a.entries()]
    for k in range(n):
        for i in range(n):
            gik = g[i][k]
            if gik is EPSILON:
                continue
            row_k = g[k]
            row_i = g[i]
            for j in range(n):
                gkj = row_k[j]
                if gkj is EPSILON:
                    continue
                cand = gik + gkj
                if row_i[j] is EPSILON or cand > row_i[j]:
                    row_i[j] = cand
    return TropMatrix(g)


def kleene_star(a: TropMatrix) -> TropMatrix:
    """Delta(A) = I oplus Gamma(A); idempotent under otimes."""
    return TropMatrix.identity(a.rows).oplus(metric_matrix(a))


@dataclass(frozen=True)
class EigenBasis:
    """Canonical eigenvector generators: one critical column per class."""

    eigenvalue: Scalar
    vectors: Tuple[Tuple[int, TropMatrix], ...]  # (0-based critical node, column)

    def to_json_dict(self) -> dict:
        return {
            "lambda": format_scalar(self.eigenvalue),
            "vectors": [
                {"node": node + 1, "v": [format_scalar(x) for x in v.col(0)]}
                for node, v in self.vectors
            ],
        }


def _proportional(u: Tuple[Scalar, ...], v: Tuple[Scalar, ...]) -> bool:
    """True iff v = c otimes u for some finite scalar c."""
    shift = None
    for a, b in zip(u, v):
        if (a is EPSILON) != (b is EPSILON):
            return False
        if a is EPSILON:
            continue
        d = b - a
        if shift is None:
            shift = d
        elif d != shift:
            return False
    return True


def eigenvectors(a: TropMatrix) -> EigenBasis:
    """Eigenvectors of an irreducible matrix: the critical columns of
    Gamma((-lambda) otimes A), deduplicated up to tropical scaling."""
    from .graphs import is_irreducible, max_cycle_mean

    a.require_square()
    if not is_irreducible(a):
        raise ReducibleMatrixError("eigenvector extraction requires an irreducible matrix")
    lam = max_cycle_mean(a)
    if lam is EPSILON:
        raise DomainError("acyclic matrix has no eigenvalue to normalize by")
    gamma = metric_matrix(a.scalar_mul(-lam))
    crit = [i for i in range(a.rows) if gamma[i, i] == 0]
    kept: List[Tuple[int, TropMatrix]] = []
    for i in crit:
        col = gamma.col(i)
        if any(_proportional(v.col(0), col) for _, v in kept):
            continue
        kept.append((i, TropMatrix.column(col)))
    return EigenBasis(eigenvalue=lam, vectors=tuple(kept))


def check_eigen(a: TropMatrix, x: TropMatrix, lam: Scalar) -> bool:
    """True iff A otimes x equals lam otimes x bit-exactly."""
    if all(v is EPSILON for v in x.col(0)):
        raise DomainError("the all-epsilon vector is not an eigenvector candidate")
    return a.otimes(x) == x.scalar_mul(lam)
