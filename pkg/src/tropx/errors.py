"""Exceptions shared across the toolkit."""


class TropicalError(Exception):
    """Base class for all toolkit errors."""


class DomainError(TropicalError):
    """Input outside the mathematical domain of an operation."""


class DimensionMismatchError(TropicalError):
    """Operands have incompatible shapes."""


class NonSquareError(TropicalError):
    """A square matrix was required."""


class ReducibleMatrixError(TropicalError):
    """An irreducible matrix was required."""


class DivergenceError(TropicalError):
    """The metric-matrix series diverges (maximum cycle mean is positive)."""

    def __init__(self, cycle_mean):
        self.cycle_mean = cycle_mean
        super().__init__(
            f"series diverges: maximum cycle mean {cycle_mean} > 0"
        )


class CapExceededError(TropicalError):
    """A bounded power search ran out of budget before finding a period."""

    def __init__(self, cap, steps_done):
        self.cap = cap
        self.steps_done = steps_done
        super().__init__(
            f"no period found within cap={cap} (searched {steps_done} powers)"
        )


class MatrixParseError(TropicalError):
    """Malformed matrix/vector text; carries 1-based line and token position."""

    def __init__(self, line, token, message):
        self.line = line
        self.token = token
        super().__init__(f"line {line}, token {token}: {message}")


class OracleBoundError(TropicalError):
    """Brute-force oracle refused an input beyond its configured bounds."""


class VerifyMismatchError(TropicalError):
    """A --verify cross-check disagreed with the fast path."""

    def __init__(self, what, fast, oracle):
        self.what = what
        self.fast = fast
        self.oracle = oracle
        super().__init__(
            f"verification failed for {what}: fast path {fast!r} vs oracle {oracle!r}"
        )
