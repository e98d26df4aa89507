"""The formal expectation operator over polynomials in umbral symbols.

An :class:`UmbralExpr` is a polynomial whose indeterminates are either bound
to an umbra (plus a component index and an independent-copy tag) or left
free.  :func:`expect` integrates out every bound symbol by linearity,
factorizing over distinct ``(umbra, copy)`` pairs, and returns a polynomial
in the free variables.

The two exponential helpers expand ``E exp(...)`` termwise from the moment
rules.  They never use a closed form: closed forms are what gets checked
against them.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import factorial
from typing import Mapping

from gmpy2 import mpq

from .errors import CompositionNonNilpotent, TruncationOverflow, UnboundSymbol
from .exact import ONE, ExactScalar
from .poly import MultiPoly, PolyAccumulator
from .umbrae import CIRC_Z, GAUSS_M, UmbraSpec, moment

__all__ = [
    "Binding",
    "UmbralExpr",
    "expect",
    "expect_exp_quadratic",
    "expect_exp_gauss",
    "DEFAULT_TRUNCATION",
    "MAX_TRUNCATION",
]

DEFAULT_TRUNCATION = 24
MAX_TRUNCATION = 64


@dataclass(frozen=True)
class Binding:
    umbra: UmbraSpec
    component: int = 0
    copy: int = 0


@dataclass(frozen=True)
class UmbralExpr:
    """``body`` with some indeterminates bound to umbrae.

    If ``free`` is given, every indeterminate of ``body`` must be either
    bound or listed there; anything else raises :class:`UnboundSymbol`.
    """

    body: MultiPoly
    bindings: Mapping[str, Binding]
    free: frozenset | None = field(default=None)

    def __post_init__(self):
        seen = {}
        for name, b in self.bindings.items():
            if not 0 <= b.component < b.umbra.arity:
                raise ValueError(f"component {b.component} out of range for {b.umbra}")
            slot = (b.umbra.id, b.component, b.copy)
            if slot in seen:
                raise ValueError(f"{name!r} and {seen[slot]!r} bind the same umbral slot {slot}")
            seen[slot] = name
        if self.free is not None:
            stray = set(self.body.variables) - set(self.bindings) - set(self.free)
            if stray:
                raise UnboundSymbol(f"unbound umbral symbols: {sorted(stray)}")


def expect(expr: UmbralExpr | MultiPoly, bindings: Mapping[str, Binding] | None = None) -> MultiPoly:
    """Apply the expectation operator; returns a polynomial in the free variables."""
    if isinstance(expr, MultiPoly):
        expr = UmbralExpr(expr, dict(bindings or {}))
    bind = expr.bindings
    acc = PolyAccumulator()
    cache: dict = {}
    for mono, c in expr.body.terms():
        groups: dict = defaultdict(lambda: [0, 0])
        free = {}
        for name, e in mono:
            b = bind.get(name)
            if b is None:
                free[name] = e
            else:
                groups[(b.umbra, b.copy)][b.component] += e
        factor = ONE
        for (umbra, _), powers in groups.items():
            idx = tuple(powers) if umbra.arity == 2 else powers[0]
            key = (umbra.id, idx)
            m = cache.get(key)
            if m is None:
                m = cache[key] = moment(umbra, idx)
            if m.is_zero():
                factor = None
                break
            factor = factor * m
        if factor is None:
            continue
        acc.add_monomial(free, c * factor)
    return acc.result()


def _check_order(order: int):
    if order < 0:
        raise ValueError("order must be >= 0")
    if order > MAX_TRUNCATION:
        raise TruncationOverflow(f"order {order} exceeds the configured bound {MAX_TRUNCATION}")


def _series_weights(args, weights):
    if weights is not None:
        return dict(weights)
    names = set()
    for p in args:
        names.update(p.variables)
    return {n: 1 for n in names}


def _min_grades(args, weights):
    out = []
    for name, p in args:
        if p.is_zero():
            out.append(None)
            continue
        g = p.min_grade(weights)
        if g == 0:
            raise CompositionNonNilpotent(
                f"argument {name!r} has a part of weighted degree 0; it must vanish at the origin"
            )
        out.append(g)
    return out


def _powers(p: MultiPoly, g, order, weights):
    """Truncated powers ``[p^0, p^1, ...]`` up to weighted degree ``order``."""
    if g is None:
        return [MultiPoly.one()]
    out = [MultiPoly.one()]
    for _ in range(order // g):
        out.append(out[-1].mul_trunc(p, order, weights))
    return out


def expect_exp_quadratic(
    a=0,
    b=0,
    u=0,
    v=0,
    w=0,
    order: int = DEFAULT_TRUNCATION,
    weights: Mapping[str, int] | None = None,
) -> MultiPoly:
    """``E exp(Z a + conj(Z) b + Z^2 u + Z conj(Z) v + conj(Z)^2 w)``, truncated.

    ``Z`` is circular complex normal.  The exponential is split into a
    product of five exponentials and expanded; each monomial
    ``Z^p conj(Z)^q`` is replaced by ``delta_{pq} p!``.  Truncation is by
    weighted degree in the series variables (``weights``; default: every
    indeterminate of the arguments with weight 1).
    """
    _check_order(order)
    args = [MultiPoly.const(x) if not isinstance(x, MultiPoly) else x for x in (a, b, u, v, w)]
    weights = _series_weights(args, weights)
    ga, gb, gu, gv, gw = _min_grades(zip("abuvw", args), weights)
    pa, pb, pu, pv, pw = (_powers(p, g, order, weights) for p, g in zip(args, (ga, gb, gu, gv, gw)))
    g = lambda gr: gr or 0
    acc = PolyAccumulator()
    for alpha, A in enumerate(pa):
        for mu, U in enumerate(pu):
            used = alpha * g(ga) + mu * g(gu)
            if used > order:
                break
            AU = A.mul_trunc(U, order, weights) if mu else A
            for nu, V in enumerate(pv):
                used2 = used + nu * g(gv)
                if used2 > order:
                    break
                AUV = AU.mul_trunc(V, order, weights) if nu else AU
                if AUV.is_zero():
                    continue
                zpow = alpha + 2 * mu  # power of Z beyond the Z conj(Z) pairs
                for omega in range(zpow // 2 + 1):
                    beta = zpow - 2 * omega
                    if beta >= len(pb) or omega >= len(pw):
                        continue
                    if used2 + beta * g(gb) + omega * g(gw) > order:
                        continue
                    # E Z^{alpha+2mu+nu} conj(Z)^{beta+nu+2omega} = (alpha+2mu+nu)!
                    c = mpq(
                        factorial(zpow + nu),
                        factorial(alpha) * factorial(beta) * factorial(mu) * factorial(nu) * factorial(omega),
                    )
                    term = AUV
                    if beta:
                        term = term.mul_trunc(pb[beta], order, weights)
                    if omega:
                        term = term.mul_trunc(pw[omega], order, weights)
                    acc.add(term, c)
    return acc.result()


def expect_exp_gauss(
    x_coef=0,
    y_coef=0,
    order: int = DEFAULT_TRUNCATION,
    weights: Mapping[str, int] | None = None,
) -> MultiPoly:
    """``E exp(M X + M^2 Y)`` with ``M = i * G``, ``G ~ N(0, 2)``, truncated.

    Expanded as ``sum_{j,k} X^j Y^k / (j! k!) * E M^{j+2k}``.
    """
    _check_order(order)
    args = [MultiPoly.const(x) if not isinstance(x, MultiPoly) else x for x in (x_coef, y_coef)]
    weights = _series_weights(args, weights)
    gx, gy = _min_grades(zip("xy", args), weights)
    px, py = _powers(args[0], gx, order, weights), _powers(args[1], gy, order, weights)
    acc = PolyAccumulator()
    for j, X in enumerate(px):
        for k, Y in enumerate(py):
            if j * (gx or 0) + k * (gy or 0) > order:
                break
            n = j + 2 * k
            if n % 2:
                continue
            # E (iG)^n = (-1)^{n/2} E G^n
            m = moment(GAUSS_M, n)
            if (n // 2) % 2:
                m = -m
            term = X.mul_trunc(Y, order, weights) if k else X
            acc.add(term, m * ExactScalar(mpq(1, factorial(j) * factorial(k))))
    return acc.result()
