"""Exact max-plus scalar arithmetic.

Scalars are either exact rationals (``fractions.Fraction``) or the bottom
element ``EPSILON`` (minus infinity).  All operations are pure and exact;
no floating point is involved anywhere in the semiring itself.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import DomainError


class _Epsilon:
    """The bottom element -inf: neutral for oplus, absorbing for otimes.

    A distinct sentinel (not a very negative number) so the absorbing laws
    hold exactly.  Orders below every rational, so the built-in ``max`` and
    ``min`` work directly on mixed values.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropx-epsilon")

    def __reduce__(self):
        return (_Epsilon, ())


EPSILON = _Epsilon()

Scalar = Union[Fraction, _Epsilon]

ZERO = Fraction(0)  # multiplicative identity of the semiring
ONE = Fraction(1)


def as_scalar(x) -> Scalar:
    """Coerce ints, floats, strings and Fractions to a Scalar."""
    if x is EPSILON or isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, (int, float)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a tropical scalar")


def is_eps(a: Scalar) -> bool:
    return a is EPSILON


def oplus(a: Scalar, b: Scalar) -> Scalar:
    """Tropical addition: max, with EPSILON as least element."""
    return a if a >= b else b


def otimes(a: Scalar, b: Scalar) -> Scalar:
    """Tropical multiplication: conventional +, EPSILON absorbing."""
    if a is EPSILON or b is EPSILON:
        return EPSILON
    return a + b


def oplus_prime(a: Scalar, b: Scalar) -> Scalar:
    """Dual addition: min.  Satisfies a oplus' b = (a otimes b) / (a oplus b)."""
    return a if a <= b else b


def trop_factorial(n: int) -> Fraction:
    """Tropical n! = 1 + 2 + ... + n = n(n+1)/2, with 0! the empty product 0."""
    if n < 0 or n != int(n):
        raise DomainError(f"tropical factorial needs a nonnegative integer, got {n}")
    n = int(n)
    return Fraction(n * (n + 1), 2)


def scalar_exp(a: Scalar) -> Fraction:
    """Tropical exponential: sup over k >= 0 of k*a - k(k+1)/2.

    Piecewise linear: 0 for a <= 1, otherwise attained at k = floor(a).
    """
    if a is EPSILON or a <= 1:
        return ZERO
    k = math.floor(a)
    return k * a - trop_factorial(k)


def scalar_log(y: Scalar) -> Fraction:
    """Inverse of scalar_exp on (0, inf): min over n >= 1 of (y + n!)/n.

    The sequence (y + n(n+1)/2)/n is convex in n, so the scan stops at the
    first strict increase.
    """
    if y is EPSILON or y <= 0:
        raise DomainError(f"log is defined only for y > 0, got {y}")
    best = y + 1  # n = 1
    n = 2
    while True:
        cur = (y + trop_factorial(n)) / n
        if cur >= best:
            return best
        best = cur
        n += 1


def parse_scalar(token: str) -> Scalar:
    """Parse a scalar token: decimal, rational "p/q", or "-inf" (alias ".")."""
    token = token.strip()
    if token in ("-inf", "."):
        return EPSILON
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad scalar token {token!r}: {exc}") from exc


def format_scalar(a: Scalar) -> str:
    """Canonical token: integers without denominator, otherwise "p/q"."""
    if a is EPSILON:
        return "-inf"
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
