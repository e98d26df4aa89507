"""Exception types raised across the package."""


class UmbralError(Exception):
    """Base class for all package errors."""


class DivisionByNonUnit(UmbralError, ZeroDivisionError):
    """Series division by a series with zero constant coefficient."""


class CompositionNonNilpotent(UmbralError, ValueError):
    """Series composition with an inner series whose constant term is nonzero."""


class DegreeOverflow(UmbralError, OverflowError):
    """An exponent no longer fits the packed monomial layout."""


class TruncationOverflow(UmbralError, ValueError):
    """Requested truncation order exceeds the configured bound."""


class UnboundSymbol(UmbralError, KeyError):
    """An umbral symbol in an expression has no binding."""


class MomentTooHigh(UmbralError, ValueError):
    """Monte Carlo moment order above the configured cap."""


class QuadratureNonConvergent(UmbralError, RuntimeError):
    """Numeric quadrature missed its tolerance within the evaluation budget."""
