"""Polynomial and number families, each computable by two independent routes.

``path="oracle"`` uses classical recurrences, defining sums or series
division; ``path="umbral"`` averages a polynomial in an umbral symbol with
:func:`umbral.expectation.expect`.  The two never share code beyond the
exact arithmetic, so agreement between them is a real cross-check.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from gmpy2 import mpq

from .exact import I, ExactScalar, as_scalar
from .expectation import Binding, expect
from .poly import MultiPoly
from .series import TruncSeries, elementary_series, exp_series
from .umbrae import CIRC_Z, GAUSS_M, L, L0

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "euler_number",
    "euler_poly",
    "hermite",
    "carlitz_hermite",
    "zeilberger_hermite",
    "power_sum",
    "chen_k",
    "integrate_poly",
    "FAMILIES",
]

PATHS = ("oracle", "umbral")

HALF = mpq(1, 2)

# private symbol names for the umbral variables, chosen not to clash with user variables
_LS, _ZS, _ZB = "_L", "_Z", "_Zbar"


def _check(n: int, path: str):
    if n < 0:
        raise ValueError("index must be >= 0")
    if path not in PATHS:
        raise ValueError(f"path must be one of {PATHS}, got {path!r}")


# Bernoulli -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    B = [mpq(1)]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, k) * B[k] for k in range(m))
        B.append(-s / (m + 1))
    return tuple(B)


def _bernoulli_oracle(n: int) -> mpq:
    return _bernoulli_table(max(n, 64))[n]


@lru_cache(maxsize=None)
def _umbral_shifted_power(umbra_id: str, n: int, var: str | None) -> MultiPoly:
    umbra = L if umbra_id == "L" else L0
    base = I * MultiPoly.var(_LS) - HALF
    if var is not None:
        base = base + MultiPoly.var(var)
    return expect(base**n, {_LS: Binding(umbra)})


def bernoulli_number(n: int, path: str = "oracle") -> ExactScalar:
    """B_n with B_1 = -1/2; umbral route is E(iL - 1/2)^n."""
    _check(n, path)
    if path == "oracle":
        return ExactScalar(_bernoulli_oracle(n))
    return _umbral_shifted_power("L", n, None).to_scalar() if n else ExactScalar(1)


def bernoulli_poly(n: int, path: str = "oracle", var: str = "x") -> MultiPoly:
    """B_n(x); oracle via the Appell sum, umbral route E(iL + x - 1/2)^n."""
    _check(n, path)
    if path == "oracle":
        return MultiPoly(
            {((var, n - k),): comb(n, k) * _bernoulli_oracle(k) for k in range(n + 1)}
        )
    return _umbral_shifted_power("L", n, var)


# Euler -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _sech_values(order: int) -> tuple:
    return tuple(elementary_series("sech", order).derivative_values())


@lru_cache(maxsize=None)
def _euler_poly_kernel(order: int) -> tuple:
    # 2/(e^t + 1)
    den = (exp_series(order) + 1) * ExactScalar(HALF)
    return den.reciprocal().coeffs


def euler_number(n: int, path: str = "oracle") -> ExactScalar:
    """E_n from sech(t); umbral route 2^n E(i L0)^n."""
    _check(n, path)
    if path == "oracle":
        return _sech_values(max(n, 32))[n]
    if n == 0:
        return ExactScalar(1)
    e = expect((I * MultiPoly.var(_LS)) ** n, {_LS: Binding(L0)}).to_scalar()
    return e * 2**n


def euler_poly(n: int, path: str = "oracle", var: str = "x") -> MultiPoly:
    """E_n(x) from 2 e^{tx}/(e^t + 1); umbral route E(i L0 + x - 1/2)^n."""
    _check(n, path)
    if path == "oracle":
        c = _euler_poly_kernel(max(n, 32))
        return MultiPoly(
            {((var, n - k),): c[k] * mpq(factorial(n), factorial(n - k)) for k in range(n + 1)}
        )
    return _umbral_shifted_power("L0", n, var)


# Hermite -----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _hermite_oracle(n: int, var: str) -> MultiPoly:
    u = MultiPoly.var(var)
    h = [MultiPoly.one(), u * 2]
    for k in range(1, n):
        h.append(u * h[k] * 2 - h[k - 1] * (2 * k))
    return h[n]


def hermite(n: int, path: str = "oracle", var: str = "u") -> MultiPoly:
    """Physicists' Hermite H_n(u); umbral route E(2u + i G)^n, G ~ N(0, 2)."""
    _check(n, path)
    if path == "oracle":
        return _hermite_oracle(n, var)
    body = (MultiPoly.var(var) * 2 + I * MultiPoly.var(_LS)) ** n
    return expect(body, {_LS: Binding(GAUSS_M)})


# Carlitz / Zeilberger ------------------------------------------------------------

_CIRC = {_ZS: Binding(CIRC_Z, 0), _ZB: Binding(CIRC_Z, 1)}


def _defining_sum(m: int, n: int, u: MultiPoly, v: MultiPoly, w: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero()
    for k in range(min(m, n) + 1):
        out = out + (u ** (m - k)) * (v ** (n - k)) * (w**k) * (comb(m, k) * comb(n, k) * factorial(k))
    return out


def carlitz_hermite(m: int, n: int, path: str = "oracle", vars: tuple[str, str] = ("u", "v")) -> MultiPoly:
    """H_{m,n}(u, v) = sum_k C(m,k) C(n,k) k! u^{m-k} v^{n-k}.

    Umbral route ``u^{m-n} E (1+Z)^m (uv + conj Z)^n`` for m >= n; the case
    m < n goes through the symmetry H_{m,n}(u,v) = H_{n,m}(v,u).
    """
    _check(m, path)
    _check(n, path)
    un, vn = vars
    u, v = MultiPoly.var(un), MultiPoly.var(vn)
    if path == "oracle":
        return _defining_sum(m, n, u, v, MultiPoly.one())
    if m < n:
        return carlitz_hermite(n, m, path, (vn, un))
    Z, Zb = MultiPoly.var(_ZS), MultiPoly.var(_ZB)
    e = expect((1 + Z) ** m * (u * v + Zb) ** n, _CIRC)
    return e * u ** (m - n)


def zeilberger_hermite(m: int, n: int, path: str = "oracle", var: str = "w") -> MultiPoly:
    """H_{m,n}(w) = sum_k C(m,k) C(n,k) k! w^k; umbral route E (1+Z)^m (1 + w conj Z)^n."""
    _check(m, path)
    _check(n, path)
    w = MultiPoly.var(var)
    if path == "oracle":
        one = MultiPoly.one()
        return _defining_sum(m, n, one, one, w)
    Z, Zb = MultiPoly.var(_ZS), MultiPoly.var(_ZB)
    return expect((1 + Z) ** m * (1 + w * Zb) ** n, _CIRC)


# power sums, Chen's K_n, integration -------------------------------------------

def integrate_poly(p: MultiPoly, var: str, lower, upper) -> MultiPoly:
    """Definite integral of ``p`` in ``var`` between polynomial or scalar bounds."""
    F = p.antiderivative(var)
    return F.subs({var: upper}) - F.subs({var: lower})


def power_sum(k: int, n: int, path: str = "direct") -> ExactScalar:
    """S_k(n) = 1^k + ... + n^k.

    ``bernoulli_formula``: sum_i (-1)^{k-i} C(k,i) n^{i+1}/(i+1) B_{k-i};
    ``integral``: the integral of B_k(z+1) over [0, n].
    """
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    if path == "direct":
        return ExactScalar(sum(i**k for i in range(1, n + 1)))
    if path == "bernoulli_formula":
        s = sum(
            (-1) ** (k - i) * comb(k, i) * mpq(n ** (i + 1), i + 1) * _bernoulli_oracle(k - i)
            for i in range(k + 1)
        )
        return ExactScalar(s)
    if path == "integral":
        z = MultiPoly.var("z")
        shifted = bernoulli_poly(k, "oracle", "z").subs({"z": z + 1})
        return integrate_poly(shifted, "z", 0, n).to_scalar()
    raise ValueError(f"unknown power_sum path {path!r}")


def chen_k(n: int) -> ExactScalar:
    """K_n = sum_i C(n, i) B_{n+i+1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return ExactScalar(sum(comb(n, i) * _bernoulli_oracle(n + i + 1) for i in range(n + 1)))


FAMILIES = {
    "bernoulli": bernoulli_number,
    "bernoulli_poly": bernoulli_poly,
    "euler": euler_number,
    "euler_poly": euler_poly,
    "hermite": hermite,
    "carlitz": carlitz_hermite,
    "zeilberger": zeilberger_hermite,
    "power_sum": power_sum,
    "chen_k": chen_k,
}
