"""Digraph view of a square matrix: strongly connected components,
irreducibility, Frobenius normal form, maximum cycle mean (Karp),
critical graph, cyclicities, and the period via lcm of cyclicities."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import NonSquareError
from .matrices import TropMatrix
from .scalars import EPSILON, Scalar


Edge = Tuple[int, int, Scalar]


def digraph_edges(a: TropMatrix) -> List[Edge]:
    """Edges (i, j, a_ij) with finite weight, 0-based."""
    a.require_square()
    return [
        (i, j, w)
        for i, row in enumerate(a.entries())
        for j, w in enumerate(row)
        if w is not EPSILON
    ]


def _adjacency(n: int, edges: Sequence[Edge]) -> List[List[Tuple[int, Scalar]]]:
    adj: List[List[Tuple[int, Scalar]]] = [[] for _ in range(n)]
    for i, j, w in edges:
        adj[i].append((j, w))
    return adj


def tarjan_scc(n: int, adj: Sequence[Sequence[Tuple[int, Scalar]]]) -> List[List[int]]:
    """Iterative Tarjan; components emitted in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    comps: List[List[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(adj[v]):
                w = adj[v][pi][0]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comps


def scc_decompose(a: TropMatrix) -> List[List[int]]:
    """SCCs in condensation-topological order (sources first), 0-based,
    ties broken by smallest contained node index."""
    edges = digraph_edges(a)
    comps = tarjan_scc(a.rows, _adjacency(a.rows, edges))
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    # condensation edges
    succ: List[set] = [set() for _ in comps]
    indeg = [0] * len(comps)
    for i, j, _ in edges:
        ci, cj = comp_of[i], comp_of[j]
        if ci != cj and cj not in succ[ci]:
            succ[ci].add(cj)
            indeg[cj] += 1
    # Kahn with smallest-node tie-break for determinism
    import heapq

    heap = [(comps[ci][0], ci) for ci in range(len(comps)) if indeg[ci] == 0]
    heapq.heapify(heap)
    order: List[List[int]] = []
    while heap:
        _, ci = heapq.heappop(heap)
        order.append(comps[ci])
        for cj in succ[ci]:
            indeg[cj] -= 1
            if indeg[cj] == 0:
                heapq.heappush(heap, (comps[cj][0], cj))
    return order


def is_irreducible(a: TropMatrix) -> bool:
    a.require_square()
    return len(scc_decompose(a)) == 1


@dataclass(frozen=True)
class FrobeniusForm:
    """Block lower-triangular form under simultaneous permutation.

    permutation[k] is the original (0-based) index placed at position k;
    permuted_matrix = P A P^{-1} with irreducible diagonal blocks."""

    permutation: Tuple[int, ...]
    block_sizes: Tuple[int, ...]
    diagonal_blocks: Tuple[TropMatrix, ...]
    permuted_matrix: TropMatrix

    def block_span(self, b: int) -> Tuple[int, int]:
        start = sum(self.block_sizes[:b])
        return start, start + self.block_sizes[b]


def frobenius_normal_form(a: TropMatrix) -> FrobeniusForm:
    """Order SCCs so every edge points from a later block to an earlier
    one, giving epsilon everywhere above the block diagonal."""
    comps = list(reversed(scc_decompose(a)))
    perm = tuple(v for comp in comps for v in comp)
    n = a.rows
    permuted = TropMatrix(
        [[a[perm[i], perm[j]] for j in range(n)] for i in range(n)]
    )
    blocks = []
    start = 0
    for comp in comps:
        k = len(comp)
        blocks.append(
            TropMatrix(
                [
                    [permuted[i, j] for j in range(start, start + k)]
                    for i in range(start, start + k)
                ]
            )
        )
        start += k
    return FrobeniusForm(
        permutation=perm,
        block_sizes=tuple(len(c) for c in comps),
        diagonal_blocks=tuple(blocks),
        permuted_matrix=permuted,
    )


def apply_inverse_permutation(f: FrobeniusForm) -> TropMatrix:
    """Recover the original matrix from a FrobeniusForm."""
    n = f.permuted_matrix.rows
    inv = [0] * n
    for k, v in enumerate(f.permutation):
        inv[v] = k
    return TropMatrix(
        [[f.permuted_matrix[inv[i], inv[j]] for j in range(n)] for i in range(n)]
    )


def _karp_component(nodes: List[int], edges: List[Edge]) -> Scalar:
    """Karp's dynamic program on one strongly connected component."""
    local = {v: k for k, v in enumerate(nodes)}
    m = len(nodes)
    in_edges: List[List[Tuple[int, Scalar]]] = [[] for _ in range(m)]
    has_edge = False
    for i, j, w in edges:
        if i in local and j in local:
            in_edges[local[j]].append((local[i], w))
            has_edge = True
    if not has_edge:
        return EPSILON
    # d[k][v] = max weight of a length-k walk from node 0 to v
    d = [[EPSILON] * m for _ in range(m + 1)]
    d[0][0] = Fraction(0)
    for k in range(1, m + 1):
        for v in range(m):
            best = EPSILON
            for u, w in in_edges[v]:
                prev = d[k - 1][u]
                if prev is EPSILON:
                    continue
                cand = prev + w
                if best is EPSILON or cand > best:
                    best = cand
            d[k][v] = best
    mu = EPSILON
    for v in range(m):
        if d[m][v] is EPSILON:
            continue
        worst = None
        for k in range(m):
            if d[k][v] is EPSILON:
                continue
            ratio = (d[m][v] - d[k][v]) / (m - k)
            if worst is None or ratio < worst:
                worst = ratio
        if worst is not None and (mu is EPSILON or worst > mu):
            mu = worst
    return mu


def max_cycle_mean(a: TropMatrix) -> Scalar:
    """Maximum cycle mean over all cycles of G_A; EPSILON when acyclic.

    Computed per strongly connected component with Karp's algorithm."""
    a.require_square()
    edges = digraph_edges(a)
    mu = EPSILON
    for comp in scc_decompose(a):
        c = _karp_component(comp, edges)
        if c is not EPSILON and (mu is EPSILON or c > mu):
            mu = c
    return mu


@dataclass(frozen=True)
class SpectralData:
    """Eigenvalue, critical graph, cyclicities and period of a matrix.

    Node indices are 0-based internally; serialization shifts to 1-based."""

    lam: Scalar
    critical_nodes: Tuple[int, ...]
    critical_edges: Tuple[Tuple[int, int], ...]
    cyclicities: Tuple[int, ...]
    period: int
    acyclic: bool = False

    def to_json_dict(self) -> dict:
        from .scalars import format_scalar

        return {
            "lambda": format_scalar(self.lam),
            "critical_nodes": [i + 1 for i in self.critical_nodes],
            "critical_edges": [[i + 1, j + 1] for i, j in self.critical_edges],
            "cyclicities": list(self.cyclicities),
            "period": self.period,
        }


def _component_cyclicity(nodes: List[int], edges: List[Tuple[int, int]]) -> int:
    """gcd of cycle lengths of a strongly connected digraph via BFS levels."""
    local = {v: k for k, v in enumerate(nodes)}
    adj: List[List[int]] = [[] for _ in nodes]
    for i, j in edges:
        adj[local[i]].append(local[j])
    level = [-1] * len(nodes)
    level[0] = 0
    q = deque([0])
    g = 0
    while q:
        u = q.popleft()
        for v in adj[u]:
            if level[v] == -1:
                level[v] = level[u] + 1
                q.append(v)
            else:
                g = math.gcd(g, level[u] + 1 - level[v])
    return abs(g) if g else 1


def critical_graph(a: TropMatrix) -> SpectralData:
    """Critical edges/nodes, per-component cyclicities g_s, and the period
    lcm(g_s).

    An edge (i,j) is critical iff it lies on a cycle of mean mu(A);
    detected on the normalized matrix B = (-mu) otimes A via its Kleene
    star: b_ij + Delta(B)_ji = 0.  Acyclic matrices get an empty critical
    graph and period 1 by convention (flagged)."""
    a.require_square()
    mu = max_cycle_mean(a)
    if mu is EPSILON:
        return SpectralData(
            lam=EPSILON,
            critical_nodes=(),
            critical_edges=(),
            cyclicities=(),
            period=1,
            acyclic=True,
        )
    from .spectral import kleene_star  # deferred: spectral imports graphs

    b = a.scalar_mul(-mu)
    star = kleene_star(b)
    crit_edges = []
    n = a.rows
    for i in range(n):
        for j in range(n):
            bij = b[i, j]
            back = star[j, i]
            if bij is EPSILON or back is EPSILON:
                continue
            if bij + back == 0:
                crit_edges.append((i, j))
    crit_nodes = sorted({i for i, _ in crit_edges} | {j for _, j in crit_edges})

    comps = tarjan_scc(
        n, _adjacency(n, [(i, j, Fraction(0)) for i, j in crit_edges])
    )
    cyclicities = []
    for comp in sorted(comps, key=lambda c: c[0]):
        comp_edges = [
            (i, j) for i, j in crit_edges if i in set(comp) and j in set(comp)
        ]
        if not comp_edges:
            continue
        cyclicities.append(_component_cyclicity(comp, comp_edges))
    period = 1
    for g in cyclicities:
        period = period * g // math.gcd(period, g)
    return SpectralData(
        lam=mu,
        critical_nodes=tuple(crit_nodes),
        critical_edges=tuple(crit_edges),
        cyclicities=tuple(cyclicities),
        period=period,
    )
