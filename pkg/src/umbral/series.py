"""Univariate truncated power series over Q(i)."""

from __future__ import annotations

from math import factorial
from typing import Sequence

from gmpy2 import mpq

from .errors import CompositionNonNilpotent, DivisionByNonUnit
from .exact import ONE, ZERO, ExactScalar, as_scalar
from .poly import MultiPoly

__all__ = ["TruncSeries", "DEFAULT_ORDER", "series_arith", "elementary_series", "exp_series"]

DEFAULT_ORDER = 32


class TruncSeries:
    """``sum_{k<=order} coeffs[k] * var**k``, everything beyond ``order`` unknown.

    Immutable.  Binary operations require matching variable and order.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None, var: str = "t"):
        cs = [as_scalar(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = (cs + [ZERO] * (order + 1))[: order + 1]
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def from_poly(cls, p: MultiPoly, order: int, var: str = "t") -> TruncSeries:
        extra = set(p.variables) - {var}
        if extra:
            raise ValueError(f"polynomial has indeterminates other than {var}: {sorted(extra)}")
        return cls([p.coeff({var: k}) for k in range(order + 1)], order, var)

    def to_poly(self) -> MultiPoly:
        return MultiPoly({((self.var, k),): c for k, c in enumerate(self.coeffs) if c})

    def __getitem__(self, k: int) -> ExactScalar:
        return self.coeffs[k]

    def _check(self, other: TruncSeries):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.var != self.var or other.order != self.order:
            raise ValueError(
                f"series mismatch: ({self.var}, {self.order}) vs ({other.var}, {other.order})"
            )

    def _new(self, coeffs) -> TruncSeries:
        return TruncSeries(coeffs, self.order, self.var)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = self._new([other])
        self._check(other)
        return self._new([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = self._new([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = as_scalar(other)
            return self._new([a * c for a in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = self.order
        out = []
        for k in range(n + 1):
            s = ZERO
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s = s + a[i] * b[k - i]
            out.append(s)
        return self._new(out)

    __rmul__ = __mul__

    def reciprocal(self) -> TruncSeries:
        a = self.coeffs
        if a[0].is_zero():
            raise DivisionByNonUnit("constant coefficient is zero")
        inv0 = ONE / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = ZERO
            for i in range(1, k + 1):
                if a[i]:
                    s = s + a[i] * out[k - i]
            out.append(-s * inv0)
        return self._new(out)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient (None for the zero series)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __truediv__(self, other):
        """Quotient; a common factor ``var**v`` is cancelled first.

        Cancelling ``var**v`` costs ``v`` known coefficients, so the result
        then has order ``order - v``.
        """
        if not isinstance(other, TruncSeries):
            return self * (ONE / as_scalar(other))
        self._check(other)
        v = other.valuation()
        if v is None:
            raise DivisionByNonUnit("division by the zero series")
        if v == 0:
            return self * other.reciprocal()
        vs = self.valuation()
        if vs is not None and vs < v:
            raise DivisionByNonUnit(f"divisor has valuation {v} > dividend valuation {vs}")
        if v > self.order:
            raise DivisionByNonUnit("no known coefficients left after cancelling the common factor")
        n = self.order - v
        num = TruncSeries(self.coeffs[v:], n, self.var)
        den = TruncSeries(other.coeffs[v:], n, self.var)
        return num * den.reciprocal()

    def compose(self, inner: TruncSeries) -> TruncSeries:
        """``self(inner(t))``; ``inner`` must have zero constant term."""
        self._check(inner)
        if not inner.coeffs[0].is_zero():
            raise CompositionNonNilpotent("inner series has a nonzero constant term")
        out = self._new([self.coeffs[self.order]])
        for k in range(self.order - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    def derivative_values(self) -> list[ExactScalar]:
        """``k! * coeffs[k]``: the derivatives at 0, e.g. moments from a moment generating series."""
        return [c * factorial(k) for k, c in enumerate(self.coeffs)]

    def is_even(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1::2])

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.var, self.order, self.coeffs) == (other.var, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order}, var={self.var!r})"

    def __str__(self):
        return f"{self.to_poly()} + O({self.var}^{self.order + 1})"


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """Dispatch ``op`` in {add, sub, mul, div, compose}; compose means ``a(b)``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "compose":
        return a.compose(b)
    raise ValueError(f"unknown series op {op!r}")


def exp_series(order: int = DEFAULT_ORDER, scale=1, var: str = "t") -> TruncSeries:
    """``exp(scale * t)``."""
    s = as_scalar(scale)
    return TruncSeries([s**k / factorial(k) for k in range(order + 1)], order, var)


def _half_pow(k: int) -> mpq:
    return mpq(1, 2**k)


def elementary_series(kind: str, order: int = DEFAULT_ORDER, var: str = "t") -> TruncSeries:
    """Exact expansions used as characteristic functions.

    ``exp``         exp(t)
    ``sinh_ratio``  (t/2) / sinh(t/2)
    ``sech_half``   sech(t/2) = 1 / cosh(t/2)
    ``sech``        sech(t)
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if kind == "exp":
        return exp_series(order, 1, var)
    if kind == "sinh_ratio":
        # sinh(t/2)/(t/2) = sum (t/2)^{2k} / (2k+1)!, then invert
        cs = [ZERO] * (order + 1)
        for k in range(0, order + 1, 2):
            cs[k] = ExactScalar(_half_pow(k) / factorial(k + 1))
        return TruncSeries(cs, order, var).reciprocal()
    if kind == "sech_half":
        return _cosh_series(order, mpq(1, 2), var).reciprocal()
    if kind == "sech":
        return _cosh_series(order, mpq(1), var).reciprocal()
    raise ValueError(f"unknown elementary series {kind!r}")


def _cosh_series(order: int, scale, var: str) -> TruncSeries:
    cs = [ZERO] * (order + 1)
    for k in range(0, order + 1, 2):
        cs[k] = ExactScalar(scale**k / factorial(k))
    return TruncSeries(cs, order, var)
