import random
from fractions import Fraction

import pytest

from tropx import EPSILON, TropMatrix


def random_matrix(rng, n, lo=-5, hi=8, eps_prob=0.2):
    """Random square matrix with integer entries and some epsilon holes."""
    return TropMatrix(
        [
            [
                EPSILON if rng.random() < eps_prob else Fraction(rng.randint(lo, hi))
                for _ in range(n)
            ]
            for _ in range(n)
        ]
    )


def random_irreducible(rng, n, lo=-5, hi=8, eps_prob=0.4):
    """Random matrix made strongly connected by filling a Hamiltonian cycle."""
    rows = [
        [
            EPSILON if rng.random() < eps_prob else Fraction(rng.randint(lo, hi))
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    order = list(range(n))
    rng.shuffle(order)
    for k in range(n):
        i, j = order[k], order[(k + 1) % n]
        if rows[i][j] is EPSILON:
            rows[i][j] = Fraction(rng.randint(lo, hi))
    return TropMatrix(rows)


def random_vector(rng, n, lo=-5, hi=5):
    return TropMatrix.column([Fraction(rng.randint(lo, hi)) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240824)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" not in nodeid or getattr(rep, "when", "call") != "call":
                continue
            name = nodeid.rsplit("::", 1)[-1]
            if not name.startswith("test_criterion_"):
                continue
            number = int(name.split("_")[2])
            label = " ".join(name.split("_")[3:])
            rows.append((number, label, "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for number, label, verdict in sorted(rows):
            terminalreporter.write_line(f"criterion {number:2d} [{verdict}] {label}")


# Matrices quoted throughout the suite.
NEGATIVE_3X3 = TropMatrix([[-2, -4, -1], [-3, -8, -4], [-1, -5, -6]])
POSITIVE_4X4 = TropMatrix([[3, 1, 2, 4], [2, 3, 1, 1], [4, 2, 2, 1], [3, 2, 1, 2]])
CYCLIC_3X3 = TropMatrix([[4, 3, 2], [5, 2, 6], [3, 4, 2]])
FIVE_BY_FIVE = TropMatrix(
    [
        [2, 0, -1, 3, 1],
        [3, -1, 1, 2, 0],
        [0, 4, -1, 2, 1],
        [1, 2, 2, 1, 0],
        [-1, 0, 1, 0, 0],
    ]
)
