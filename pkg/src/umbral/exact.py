"""Gaussian rationals Q(i) with arbitrary-precision parts.

Rationals are ``gmpy2.mpq`` values, which are always stored in lowest terms
with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["ExactScalar", "I", "ZERO", "ONE", "as_rational", "as_scalar", "format_rational"]

_MPQ = type(mpq(0))


def as_rational(value) -> mpq:
    """Coerce ints, Fractions, mpq and rational strings ("p/q") to ``mpq``."""
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, bool):
        return mpq(int(value))
    if isinstance(value, (int, Fraction, Rational)):
        return mpq(value)
    if isinstance(value, str):
        return mpq(Fraction(value.replace("−", "-")))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class ExactScalar:
    """Immutable element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def is_real(self) -> bool:
        return self.im == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def conjugate(self) -> ExactScalar:
        return ExactScalar._raw(self.re, -self.im)

    def norm(self) -> mpq:
        """Squared modulus ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ExactScalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return ExactScalar._raw(a * c, b)
        return ExactScalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(i)")
        n = other.norm()
        c, d = other.re / n, -other.im / n
        a, b = self.re, self.im
        return ExactScalar._raw(a * c - b * d, a * d + b * c)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** (-n))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    # rendering ------------------------------------------------------------
    def __repr__(self):
        return f"ExactScalar({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)} {sign} {_imag_str(abs(self.im))}"

    def to_json(self):
        """``"p/q"`` for real values, ``{"re": "p/q", "im": "p/q"}`` otherwise."""
        if self.im == 0:
            return format_rational(self.re)
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, data) -> ExactScalar:
        if isinstance(data, dict):
            return cls(data["re"], data["im"])
        return cls(data)


def _imag_str(q) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{format_rational(q)}*i"


def _coerce(value):
    if isinstance(value, ExactScalar):
        return value
    try:
        return ExactScalar._raw(as_rational(value), mpq(0))
    except TypeError:
        return NotImplemented


def as_scalar(value) -> ExactScalar:
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return out


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
