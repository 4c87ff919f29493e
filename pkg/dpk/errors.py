# dpk/errors.py
from typing import Optional


class DpkError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(DpkError, ValueError):
    """Argument outside the domain of the function (t <= 0, nu <= -1, h_N(x) = 0, ...)."""


class ArgumentError(DpkError, ValueError):
    """Malformed or inconsistent arguments (size mismatch, unordered times, bad grid)."""


class UnsupportedSizeError(ArgumentError):
    """Requested size is outside what the chosen method supports."""


class RangeError(DpkError, OverflowError):
    """Result would overflow double precision."""


class PrecisionError(DpkError, ArithmeticError):
    """A series or quadrature did not reach the requested accuracy."""

    def __init__(self, message: str, achieved: Optional[float] = None) -> None:
        super().__init__(message)
        self.achieved = achieved


class NumericalConsistencyError(DpkError, ArithmeticError):
    """An identity that must hold numerically was violated."""


class KernelDivisionError(DpkError, ZeroDivisionError):
    """Palm kernel requested at a point where K(z, z) vanishes."""
