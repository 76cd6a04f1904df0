"""Dense tropical matrices over exact rational scalars.

Matrices are immutable; every operation returns a new matrix and is safe
to call concurrently.  The text format is an optional "n m" header line
followed by n rows of m whitespace-separated scalar tokens.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatchError, MatrixParseError, NonSquareError
from .scalars import (
    EPSILON,
    Scalar,
    as_scalar,
    format_scalar,
    oplus,
    otimes,
    parse_scalar,
)


class TropMatrix:
    """A rows x cols grid of tropical scalars."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Sequence[Sequence]):
        grid = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if not grid or not grid[0]:
            raise DimensionMismatchError("matrix must have at least one entry")
        cols = len(grid[0])
        for row in grid:
            if len(row) != cols:
                raise DimensionMismatchError("ragged rows in matrix literal")
        self.rows = len(grid)
        self.cols = cols
        self._entries = grid

    # -- construction ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls(
            [[Fraction(0) if i == j else EPSILON for j in range(n)] for i in range(n)]
        )

    @classmethod
    def all_eps(cls, rows: int, cols: int) -> "TropMatrix":
        return cls([[EPSILON] * cols for _ in range(rows)])

    @classmethod
    def column(cls, values: Sequence) -> "TropMatrix":
        return cls([[v] for v in values])

    # -- access ---------------------------------------------------------

    def __getitem__(self, ij: Tuple[int, int]) -> Scalar:
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self._entries[i]

    def col(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(row[j] for row in self._entries)

    def col_matrix(self, j: int) -> "TropMatrix":
        return TropMatrix.column(self.col(j))

    def entries(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return self._entries

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self) -> None:
        if not self.is_square:
            raise NonSquareError(f"expected a square matrix, got {self.rows}x{self.cols}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TropMatrix)
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"TropMatrix({[list(r) for r in self._entries]!r})"

    # -- semiring operations --------------------------------------------

    def _check_same_shape(self, other: "TropMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def oplus(self, other: "TropMatrix") -> "TropMatrix":
        """Entrywise maximum."""
        self._check_same_shape(other)
        return TropMatrix(
            [
                [oplus(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self._entries, other._entries)
            ]
        )

    def otimes(self, other: "TropMatrix") -> "TropMatrix":
        """Max-plus product: (A otimes B)_ij = max_k (a_ik + b_kj)."""
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = list(zip(*other._entries))
        out = []
        for ra in self._entries:
            out_row = []
            for cb in bt:
                acc = EPSILON
                for a, b in zip(ra, cb):
                    if a is EPSILON or b is EPSILON:
                        continue
                    s = a + b
                    if acc is EPSILON or s > acc:
                        acc = s
                out_row.append(acc)
            out.append(out_row)
        return TropMatrix(out)

    def power(self, k: int) -> "TropMatrix":
        """Tropical power by iterated multiplication; A^(0) = I."""
        self.require_square()
        if k < 0:
            raise DimensionMismatchError("negative matrix powers are not defined")
        result = TropMatrix.identity(self.rows)
        for _ in range(k):
            result = result.otimes(self)
        return result

    def scalar_mul(self, c: Scalar) -> "TropMatrix":
        """Add c to every entry (EPSILON rows stay EPSILON)."""
        c = as_scalar(c)
        return TropMatrix(
            [[otimes(c, a) for a in row] for row in self._entries]
        )

    def leq(self, other: "TropMatrix") -> bool:
        """Entrywise order: true iff self oplus other == other."""
        self._check_same_shape(other)
        return all(
            a <= b
            for ra, rb in zip(self._entries, other._entries)
            for a, b in zip(ra, rb)
        )

    # -- derived quantities ---------------------------------------------

    def max_entry(self) -> Scalar:
        return max(a for row in self._entries for a in row)

    def norm0(self) -> float:
        """Conventional exp of the largest entry; 0 for the all-eps matrix."""
        m = self.max_entry()
        if m is EPSILON:
            return 0.0
        return math.exp(m)

    def order_bound(self) -> int:
        """Termination index of the exponential series: ceil(max entry) if
        some entry is positive, else 2."""
        m = self.max_entry()
        if m is EPSILON or m <= 0:
            return 2
        return math.ceil(m)

    # -- text format ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        for row in self._entries:
            lines.append(" ".join(format_scalar(a) for a in row))
        return "\n".join(lines) + "\n"


def _parse_token(tok: str, line_no: int, tok_no: int) -> Scalar:
    try:
        return parse_scalar(tok)
    except Exception:
        raise MatrixParseError(line_no, tok_no, f"bad scalar token {tok!r}") from None


def parse_matrix(text: str) -> TropMatrix:
    """Parse the canonical matrix text format.

    The first line is treated as an "n m" header when it holds exactly two
    positive integers and exactly n data lines follow.
    """
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise MatrixParseError(1, 1, "empty matrix text")

    first_toks = lines[0][1].split()
    header = None
    if len(first_toks) == 2:
        try:
            n, m = int(first_toks[0]), int(first_toks[1])
            if n > 0 and m > 0 and len(lines) - 1 == n:
                header = (n, m)
        except ValueError:
            header = None
    data = lines[1:] if header else lines

    rows: List[List[Scalar]] = []
    width = header[1] if header else None
    for line_no, ln in data:
        toks = ln.split()
        if width is None:
            width = len(toks)
        if len(toks) != width:
            raise MatrixParseError(
                line_no, len(toks), f"expected {width} tokens, got {len(toks)}"
            )
        rows.append(
            [_parse_token(t, line_no, k + 1) for k, t in enumerate(toks)]
        )
    return TropMatrix(rows)


def parse_vector(text: str) -> Tuple[Scalar, ...]:
    """Parse a vector file: one scalar token per line."""
    out = []
    for i, ln in enumerate(text.splitlines()):
        if not ln.strip():
            continue
        toks = ln.split()
        if len(toks) != 1:
            raise MatrixParseError(i + 1, 2, "expected one token per line")
        out.append(_parse_token(toks[0], i + 1, 1))
    if not out:
        raise MatrixParseError(1, 1, "empty vector text")
    return tuple(out)


def format_vector(v: Iterable[Scalar]) -> str:
    return "\n".join(format_scalar(a) for a in v) + "\n"


def oplus_fold(matrices: Sequence[TropMatrix]) -> TropMatrix:
    """Fold a nonempty family with entrywise max (its supremum)."""
    if not matrices:
        raise DimensionMismatchError("cannot fold an empty family")
    acc = matrices[0]
    for m in matrices[1:]:
        acc = acc.oplus(m)
    return acc
