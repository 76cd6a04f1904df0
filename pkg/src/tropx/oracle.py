"""Independent brute-force references for small instances.

These live in the shipped library (not only in the test suite) so that
the CLI's --verify flag can cross-check the fast paths on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple

from .errors import OracleBoundError
from .matrices import TropMatrix
from .scalars import EPSILON, Scalar, trop_factorial


@dataclass(frozen=True)
class OracleConfig:
    max_nodes: int = 8
    max_power: int = 512
    max_cycle_len: int = 8

    def check_nodes(self, n: int) -> None:
        if n > self.max_nodes:
            raise OracleBoundError(
                f"oracle limited to {self.max_nodes} nodes, got {n}"
            )


DEFAULT_CONFIG = OracleConfig()


def _simple_cycles(
    nodes: Sequence[int], edges: Sequence[Tuple[int, int]]
) -> List[Tuple[int, ...]]:
    """All simple cycles, canonicalized to start at their smallest node.

    DFS from each start node s over nodes >= s only, so each cycle is
    produced exactly once."""
    adj = {v: [] for v in nodes}
    for i, j in edges:
        adj[i].append(j)
    cycles: List[Tuple[int, ...]] = []
    for s in sorted(nodes):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in sorted(adj[v]):
                if w == s:
                    cycles.append(path)
                elif w > s and w not in path:
                    stack.append((w, path + (w,)))
    return cycles


def simple_cycle_lengths(
    nodes: Sequence[int], edges: Sequence[Tuple[int, int]]
) -> Set[int]:
    return {len(c) for c in _simple_cycles(nodes, edges)}


def enum_cycle_mean(
    a: TropMatrix, config: OracleConfig = DEFAULT_CONFIG
) -> Tuple[Scalar, List[Tuple[int, ...]]]:
    """Exhaustive maximum cycle mean: returns mu(A) and every critical
    simple cycle (as a 0-based node sequence starting at its smallest
    node)."""
    a.require_square()
    config.check_nodes(a.rows)
    edges = [
        (i, j)
        for i in range(a.rows)
        for j in range(a.cols)
        if a[i, j] is not EPSILON
    ]
    best: Scalar = EPSILON
    critical: List[Tuple[int, ...]] = []
    for cyc in _simple_cycles(range(a.rows), edges):
        weight = Fraction(0)
        for k, i in enumerate(cyc):
            weight += a[i, cyc[(k + 1) % len(cyc)]]
        mean = weight / len(cyc)
        if best is EPSILON or mean > best:
            best = mean
            critical = [cyc]
        elif mean == best:
            critical.append(cyc)
    return best, sorted(critical)


def brute_period(
    a: TropMatrix, bound: int = 256
) -> Optional[Tuple[int, int]]:
    """Scan normalized powers for the minimal (p, k0) with
    B^(k0+p) = B^(k0); None when nothing repeats within the bound.

    Deliberately permissive about reducibility: block cases such as
    tropical permutation matrices are legitimate inputs."""
    from .graphs import max_cycle_mean

    a.require_square()
    lam = max_cycle_mean(a)
    if lam is EPSILON:
        return None
    b = a.scalar_mul(-lam)
    powers = [None, b]
    for _ in range(bound):
        powers.append(powers[-1].otimes(b))
    for p in range(1, bound):
        for k0 in range(1, bound - p + 1):
            if powers[k0 + p] == powers[k0]:
                return p, k0
    return None


def brute_exp(a: TropMatrix, terms: int) -> TropMatrix:
    """Naive term-by-term partial sum of the exponential series, each
    power computed from scratch."""
    a.require_square()
    acc = TropMatrix.identity(a.rows)
    for k in range(1, terms + 1):
        acc = acc.oplus(a.power(k).scalar_mul(-trop_factorial(k)))
    return acc
