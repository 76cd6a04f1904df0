from fractions import Fraction

import pytest

from tropx import (
    EPSILON,
    CapExceededError,
    DomainError,
    ReducibleMatrixError,
    TropMatrix,
    brute_period,
    critical_graph,
    eigenvectors,
    exp_columns_gen_eig,
    exp_robustness_criterion,
    gen_eig_order,
    gen_orders_census,
    is_quasi_robust,
    is_robust,
    mat_exp,
    max_cycle_mean,
    orbit,
    scalar_exp,
    ultimate_period,
)

from conftest import CYCLIC_3X3, FIVE_BY_FIVE, random_irreducible, random_vector

E = EPSILON


def permutation_matrix(perm):
    """Tropical permutation matrix: 0 on positions (i, perm[i]), eps elsewhere."""
    n = len(perm)
    return TropMatrix(
        [[Fraction(0) if perm[i] == j else E for j in range(n)] for i in range(n)]
    )


SWAP_PAIRS = permutation_matrix([1, 0, 3, 2])  # the transposition pair (12)(34)


class TestUltimatePeriod:
    def test_fixed_point(self):
        cert = ultimate_period(TropMatrix([[0]]))
        assert cert.period == 1
        assert cert.transient == 1
        assert cert.witness_equal

    def test_cyclic_example(self):
        cert = ultimate_period(CYCLIC_3X3)
        assert cert.period == 2
        assert cert.lam == 5
        assert cert.witness_equal

    def test_five_by_five(self):
        # cross-checked by the brute-force scan oracle
        assert brute_period(FIVE_BY_FIVE)[0] == 4
        assert ultimate_period(FIVE_BY_FIVE).period == 4

    def test_certificate_minimality(self, rng):
        for _ in range(40):
            a = random_irreducible(rng, rng.randint(1, 5), lo=-3, hi=4)
            cert = ultimate_period(a)
            p, k0, lam = cert.period, cert.transient, cert.lam
            assert a.power(k0 + p) == a.power(k0).scalar_mul(p * lam)
            if k0 > 1:
                assert a.power(k0 - 1 + p) != a.power(k0 - 1).scalar_mul(p * lam)
            for q in range(1, p):
                if p % q == 0:
                    assert a.power(k0 + q) != a.power(k0).scalar_mul(q * lam)

    def test_matches_gavalec_formula(self, rng):
        for _ in range(60):
            a = random_irreducible(rng, rng.randint(1, 6), lo=-3, hi=4)
            assert ultimate_period(a).period == critical_graph(a).period

    def test_cap_exceeded(self):
        with pytest.raises(CapExceededError):
            ultimate_period(FIVE_BY_FIVE, cap=2)

    def test_reducible_rejected(self):
        with pytest.raises(ReducibleMatrixError):
            ultimate_period(TropMatrix([[0, E], [E, 0]]))


class TestRobustness:
    def test_examples(self):
        assert is_robust(TropMatrix([[0]]))
        assert not is_robust(CYCLIC_3X3)
        assert is_robust(mat_exp(CYCLIC_3X3).matrix)

    def test_quasi_robust(self):
        assert is_quasi_robust(CYCLIC_3X3)
        assert is_quasi_robust(TropMatrix([[0]]))
        assert is_quasi_robust(FIVE_BY_FIVE)

    def test_diagonal_entry_lemma(self, rng):
        # planting a lambda-valued loop in every critical component forces
        # period 1
        for _ in range(40):
            a = random_irreducible(rng, rng.randint(1, 5), lo=-3, hi=4)
            lam = max_cycle_mean(a)
            spec = critical_graph(a)
            rows = [list(r) for r in a.entries()]
            # put the loop on one critical node per component
            from tropx.graphs import tarjan_scc, _adjacency

            comps = tarjan_scc(
                a.rows,
                _adjacency(
                    a.rows, [(i, j, Fraction(0)) for i, j in spec.critical_edges]
                ),
            )
            for comp in comps:
                if any(
                    i in set(comp) and j in set(comp) for i, j in spec.critical_edges
                ):
                    rows[comp[0]][comp[0]] = lam
            planted = TropMatrix(rows)
            assert max_cycle_mean(planted) == lam
            assert is_robust(planted)


class TestGenEigOrder:
    def test_worked_example_vectors(self):
        v = TropMatrix.column([0, -1, 1, -1, -2])
        u = TropMatrix.column([0, -1, 0, -1, -2])
        assert gen_eig_order(FIVE_BY_FIVE, v) == 2
        assert gen_eig_order(FIVE_BY_FIVE, u) == 4

    def test_eigenvectors_have_order_one(self, rng):
        for _ in range(25):
            a = random_irreducible(rng, rng.randint(1, 4), lo=-3, hi=4)
            for _, v in eigenvectors(a).vectors:
                assert gen_eig_order(a, v) == 1

    def test_all_eps_rejected(self):
        with pytest.raises(DomainError):
            gen_eig_order(CYCLIC_3X3, TropMatrix.column([E, E, E]))


class TestCensus:
    def test_five_by_five(self):
        orders = gen_orders_census(FIVE_BY_FIVE)
        assert orders <= {1, 2, 4}
        assert 4 in orders

    def test_robust_matrix(self):
        assert gen_orders_census(mat_exp(CYCLIC_3X3).matrix) == {1}

    def test_transposition_pair(self):
        # block-diagonal with two 2-cycles: reducible, admitted explicitly
        orders = gen_orders_census(SWAP_PAIRS, allow_reducible=True)
        assert orders <= {1, 2}
        assert 2 in orders

    def test_order_law(self, rng):
        for _ in range(40):
            a = random_irreducible(rng, rng.randint(1, 5), lo=-3, hi=4)
            p = ultimate_period(a).period
            allowed = {1, p}
            if p % 2 == 0:
                allowed.add(p // 2)
            assert gen_orders_census(a) <= allowed


class TestExpColumns:
    def test_strictly_periodic_family(self, rng):
        from tropx import kleene_star

        for _ in range(20):
            n = rng.randint(1, 4)
            c = random_irreducible(rng, n, lo=-6, hi=-1)
            b = kleene_star(c)
            a = b.scalar_mul(Fraction(rng.randint(2, 6)))
            report = exp_columns_gen_eig(a)
            assert report.hypothesis_met
            assert all(r.order is not None for r in report.records)

    def test_transposition_pair_power_columns(self):
        # columns of powers of the 0/eps permutation matrix are order-2
        # generalized eigenvectors
        for k in (1, 2, 3):
            p = SWAP_PAIRS.power(k)
            for j in range(4):
                order = gen_eig_order(
                    SWAP_PAIRS, p.col_matrix(j), period=2, allow_reducible=True
                )
                assert order in (1, 2)
        assert ultimate_period(SWAP_PAIRS, allow_reducible=True).period == 2
        assert brute_period(SWAP_PAIRS) == (2, 1)

    def test_hypothesis_gate(self):
        report = exp_columns_gen_eig(NEGATIVE_DIAG)
        assert not report.hypothesis_met
        assert report.reasons


NEGATIVE_DIAG = TropMatrix([[0, 2], [2, 0]])  # diagonal below 1


class TestOrbit:
    def test_robust_reaches_eigenvector(self, rng):
        a = mat_exp(CYCLIC_3X3).matrix
        for _ in range(10):
            x0 = random_vector(rng, 3)
            report = orbit(a, x0, max_steps=32)
            assert report.stable
            assert report.entry_order == 1

    def test_cyclic_generic_start(self):
        report = orbit(CYCLIC_3X3, TropMatrix.column([0, 0, 1]), max_steps=32)
        assert report.stable
        assert report.entry_order == 2

    def test_eigenvector_start(self):
        _, v = eigenvectors(CYCLIC_3X3).vectors[0]
        report = orbit(CYCLIC_3X3, v, max_steps=8)
        assert report.entry_index == 0
        assert report.entry_order == 1

    def test_all_eps_start(self):
        with pytest.raises(DomainError):
            orbit(CYCLIC_3X3, TropMatrix.column([E, E, E]))


class TestExpRobustnessCriterion:
    def test_cyclic_example(self):
        ok, details = exp_robustness_criterion(CYCLIC_3X3)
        assert ok  # critical length 2 divides lambda - 1 = 4
        assert details[0].cycle_lengths == (2,)

    def test_length_one_loop(self):
        a = TropMatrix([[3, 1], [1, 0]])
        assert max_cycle_mean(a) == 3
        ok, _ = exp_robustness_criterion(a)
        assert ok

    def test_criterion_implies_exp_robust(self, rng):
        hits = 0
        for _ in range(200):
            a = random_irreducible(rng, rng.randint(1, 5), lo=-3, hi=6)
            ok, _ = exp_robustness_criterion(a)
            if ok:
                hits += 1
                assert is_robust(mat_exp(a).matrix)
        assert hits >= 20  # the family should exercise the criterion


class TestStructuralLemmas:
    def test_period_one_columns(self, rng):
        # for period-1 A: e^(A) (x) A^(k) = e^(lambda) (x) A^(k) for k >= k0
        checked = 0
        for _ in range(4000):
            if checked >= 20:
                break
            a = random_irreducible(rng, rng.randint(1, 4), lo=-3, hi=4)
            cert = ultimate_period(a)
            if cert.period != 1:
                continue
            checked += 1
            e = mat_exp(a).matrix
            lam_exp = scalar_exp(cert.lam)
            for k in range(cert.transient, cert.transient + 3):
                pk = a.power(k)
                assert e.otimes(pk) == pk.scalar_mul(lam_exp)
        assert checked >= 20

    def test_strongly_irreducible_robust_exp(self, rng):
        # robust with all powers irreducible -> exponential robust
        from tropx import is_irreducible

        checked = 0
        for _ in range(4000):
            if checked >= 20:
                break
            a = random_irreducible(rng, rng.randint(1, 4), lo=-3, hi=4, eps_prob=0.15)
            if not is_robust(a):
                continue
            p = ultimate_period(a)
            if not all(is_irreducible(a.power(k)) for k in range(1, p.transient + 3)):
                continue
            checked += 1
            assert is_robust(mat_exp(a).matrix)
        assert checked >= 10

    def test_accumulation_lemma(self, rng):
        from tropx import enum_cycle_mean

        for _ in range(40):
            a = random_irreducible(rng, rng.randint(1, 5), lo=-3, hi=4)
            lam = max_cycle_mean(a)
            mu, cycles = enum_cycle_mean(a)
            assert mu == lam
            for cyc in cycles:
                m = len(cyc)
                i0 = cyc[0]
                for mult in (1, 2, 3):
                    k = m * mult
                    assert a.power(k)[i0, i0] == k * lam

    def test_non_divisor_strictness(self, rng):
        # A^(k)[i, i] = k * lambda exactly when a closed critical walk of
        # length k passes through i; otherwise the entry is strictly below
        for _ in range(40):
            a = random_irreducible(rng, rng.randint(2, 5), lo=-3, hi=4)
            lam = max_cycle_mean(a)
            spec = critical_graph(a)
            for i0 in range(a.rows):
                for k in range(1, 7):
                    entry = a.power(k)[i0, i0]
                    if _closed_walk_exists(i0, k, spec.critical_edges):
                        assert entry == k * lam
                    else:
                        assert entry is E or entry < k * lam

    def test_commuting_common_generalized_eigenvector(self, rng):
        # A and e^(A) commute; any eigenvector of A is one of e^(A), so a
        # common generalized eigenvector always exists and is exhibited here
        for _ in range(15):
            a = random_irreducible(rng, rng.randint(1, 3), lo=-3, hi=4)
            e = mat_exp(a).matrix
            assert a.otimes(e) == e.otimes(a)
            _, v = eigenvectors(a).vectors[0]
            assert gen_eig_order(a, v) == 1
            assert gen_eig_order(e, v) == 1


def _closed_walk_exists(i0, k, edges):
    """True iff the edge set contains a closed walk of length k at i0."""
    frontier = {i0}
    for _ in range(k):
        frontier = {j for i, j in edges if i in frontier}
    return i0 in frontier
