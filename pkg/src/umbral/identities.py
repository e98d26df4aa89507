"""Registry of identities and an exact verifier.

Each entry computes both sides by independent routes (umbral expectation,
classical oracle, or a closed form expanded as a truncated series) and
compares them structurally.  Nothing here uses a tolerance.

Identities that only hold away from some indices carry the excluded set
explicitly, plus *witnesses*: checks at the excluded indices that are
expected to fail.  Witness outcomes are reported separately and do not
enter the pass/fail status of the identity.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import comb, factorial
from typing import Callable, Iterable

from gmpy2 import mpq

from .exact import I, ExactScalar
from .expectation import Binding, expect, expect_exp_gauss, expect_exp_quadratic
from .families import (
    bernoulli_number,
    bernoulli_poly,
    chen_k,
    euler_number,
    euler_poly,
    hermite,
    integrate_poly,
    power_sum,
    zeilberger_hermite,
)
from .poly import MultiPoly, PolyAccumulator, series_compose, series_exp
from .umbrae import L

__all__ = [
    "IdentityId",
    "IdentityReport",
    "Bounds",
    "PROFILES",
    "REGISTRY",
    "verify",
    "verify_all",
    "master_closed_form",
]


class IdentityId(str, Enum):
    GESSEL_72 = "GESSEL_72"
    REFLECT_B = "REFLECT_B"
    KANEKO = "KANEKO"
    MOMIYAMA = "MOMIYAMA"
    B_INTEGRAL = "B_INTEGRAL"
    B_UNIT_INTERVAL = "B_UNIT_INTERVAL"
    SYMM_BINOM = "SYMM_BINOM"
    CHEN = "CHEN"
    GESSEL_MULT = "GESSEL_MULT"
    EULER_REFLECT = "EULER_REFLECT"
    EULER_SHIFT = "EULER_SHIFT"
    EULER_EVEN_SUM = "EULER_EVEN_SUM"
    BE_LINK_SUM = "BE_LINK_SUM"
    BE_LINK_INT = "BE_LINK_INT"
    EULER_TWO_TERM = "EULER_TWO_TERM"
    HERMITE_MASTER = "HERMITE_MASTER"
    HERMITE_GF_EVEN = "HERMITE_GF_EVEN"
    HERMITE_GF_BIVAR = "HERMITE_GF_BIVAR"
    CARLITZ_MASTER = "CARLITZ_MASTER"
    ZEIL_GF = "ZEIL_GF"
    ZEIL_BILINEAR = "ZEIL_BILINEAR"
    QUINTUPLE = "QUINTUPLE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Bounds:
    """Parameter ranges for one verification run.

    ``index`` bounds one-index sweeps, ``two_index`` both sides of the
    rectangle sweeps, ``order`` the weighted truncation of generating
    functions and ``quintuple_order`` the total index of the five-fold sum.
    """

    index: int = 10
    two_index: int = 10
    order: int = 8
    quintuple_order: int = 4
    gessel_a: tuple = (2, 3, 5)
    include_excluded: bool = False  # also sweep indices outside an identity's proviso

    def __post_init__(self):
        for name in ("index", "two_index", "order", "quintuple_order"):
            if getattr(self, name) < 1:
                raise ValueError(f"bound {name} must be positive")
        if not self.gessel_a or min(self.gessel_a) < 2:
            raise ValueError("gessel_a needs integers >= 2 (a = 1 makes the prefactor singular)")

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "two_index": self.two_index,
            "order": self.order,
            "quintuple_order": self.quintuple_order,
            "gessel_a": list(self.gessel_a),
            "include_excluded": self.include_excluded,
        }


PROFILES = {
    "quick": Bounds(index=10, two_index=10, order=8, quintuple_order=4),
    "full": Bounds(index=30, two_index=12, order=24, quintuple_order=6),
}


@dataclass
class Witness:
    params: dict
    expect_fail: bool
    failed: bool
    lhs: str
    rhs: str
    note: str = ""

    @property
    def as_expected(self) -> bool:
        return self.failed == self.expect_fail

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "expected": "fail" if self.expect_fail else "hold",
            "observed": "fail" if self.failed else "hold",
            "as_expected": self.as_expected,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "note": self.note,
        }


@dataclass
class IdentityReport:
    id: IdentityId
    range: dict
    status: str
    counterexample: dict | None = None
    checked: int = 0
    witnesses: list = field(default_factory=list)
    subchecks: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("status 'fail' must come with a counterexample and vice versa")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def witnesses_ok(self) -> bool:
        return all(w.as_expected for w in self.witnesses)

    def to_json(self) -> dict:
        return {
            "id": str(self.id),
            "status": self.status,
            "detail": {
                "range": self.range,
                "checked": self.checked,
                "counterexample": self.counterexample,
                "witnesses": [w.to_json() for w in self.witnesses],
                "subchecks": self.subchecks,
                "elapsed_ms": round(self.elapsed_ms, 3),
            },
        }


# helpers -------------------------------------------------------------------

HALF = mpq(1, 2)
_X, _Y = MultiPoly.var("x"), MultiPoly.var("y")
_LS = "_L"


def _B(n):
    return bernoulli_number(n, "oracle")


def _Bu(n):
    return bernoulli_number(n, "umbral")


def _shifted_L_power(shift, n: int) -> ExactScalar:
    """E(iL + shift)^n."""
    return expect((I * MultiPoly.var(_LS) + shift) ** n, {_LS: Binding(L)}).to_scalar()


class _Sweep:
    """Run ``lhs == rhs`` over parameter points, remembering the first failure."""

    def __init__(self):
        self.checked = 0
        self.counterexample = None

    def check(self, params: dict, lhs, rhs) -> bool:
        self.checked += 1
        if lhs == rhs:
            return True
        if self.counterexample is None:
            self.counterexample = {"params": params, "lhs": _render(lhs), "rhs": _render(rhs)}
        return False


def _render(v) -> str:
    return str(v)


def _witness(params, lhs, rhs, expect_fail=True, note="") -> Witness:
    return Witness(params, expect_fail, lhs != rhs, _render(lhs), _render(rhs), note)


def _series_diff_order(lhs: MultiPoly, rhs: MultiPoly, weights) -> int | None:
    """Lowest weighted degree where two truncated series differ (None if equal)."""
    d = lhs - rhs
    if d.is_zero():
        return None
    return d.min_grade(weights)


# closed forms as truncated series -----------------------------------------

def _inv_sqrt_one_minus(X: MultiPoly, order: int, weights) -> MultiPoly:
    """(1 - X)^(-1/2) = sum C(2k, k) (X/4)^k."""
    coeffs = [mpq(comb(2 * k, k), 4**k) for k in range(order + 1)]
    return series_compose(coeffs, X, order, weights)


def _inv_one_minus(X: MultiPoly, order: int, weights) -> MultiPoly:
    return series_compose([1] * (order + 1), X, order, weights)


def master_closed_form(a, b, u, v, w, order: int, weights) -> MultiPoly:
    """Series of D^(-1/2) exp((a^2 w + b^2 u + ab(1-v)) / D), D = (1-v)^2 - 4uw."""
    a, b, u, v, w = (x if isinstance(x, MultiPoly) else MultiPoly.const(x) for x in (a, b, u, v, w))
    X = v * 2 - v * v + u * w * 4  # D = 1 - X
    num = a * a * w + b * b * u + a * b * (1 - v)
    expo = num.mul_trunc(_inv_one_minus(X, order, weights), order, weights)
    return _inv_sqrt_one_minus(X, order, weights).mul_trunc(series_exp(expo, order, weights), order, weights)


def _egf2(coef: Callable[[int, int], MultiPoly], order: int, xv="x", yv="y") -> MultiPoly:
    """sum_{m+n<=order} coef(m, n) x^m/m! y^n/n!."""
    acc = PolyAccumulator()
    for m in range(order + 1):
        for n in range(order + 1 - m):
            c = coef(m, n)
            if c.is_zero():
                continue
            acc.add(c * MultiPoly.monomial({xv: m, yv: n}), mpq(1, factorial(m) * factorial(n)))
    return acc.result()


# index identities ------------------------------------------------------------

def _gessel_72(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        if n == 1 and not b.include_excluded:
            continue
        s.check({"n": n}, _shifted_L_power(HALF, n), _B(n))
    w = [_witness({"n": 1}, _shifted_L_power(HALF, 1), _B(1), note="proviso n != 1")]
    return _report(IdentityId.GESSEL_72, {"n": [0, b.index], "excluded": [1]}, s, w)


def _reflect_b(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        if n == 1 and not b.include_excluded:
            continue
        s.check({"n": n}, _shifted_L_power(HALF, n), _B(n) * (-1) ** n)
    w = [_witness({"n": 1}, _shifted_L_power(HALF, 1), _B(1) * -1, note="proviso n != 1")]
    return _report(IdentityId.REFLECT_B, {"n": [0, b.index], "excluded": [1]}, s, w)


def _kaneko(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = sum((comb(n + 1, i) * (n + i + 1) * _B(n + i) for i in range(n + 2)), ExactScalar(0))
        s.check({"n": n}, lhs, ExactScalar(0))
    return _report(IdentityId.KANEKO, {"n": [0, b.index]}, s)


def _momiyama_sides(m: int, n: int):
    lhs = sum((comb(m + 1, k) * (n + k + 1) * _B(n + k) for k in range(m + 1)), ExactScalar(0))
    rhs = sum((comb(n + 1, k) * (m + k + 1) * _Bu(m + k) for k in range(n + 1)), ExactScalar(0))
    return lhs * (-1) ** m, rhs * (-1) ** (n + 1)


def _momiyama(b: Bounds) -> IdentityReport:
    s = _Sweep()
    T = b.two_index
    for m in range(T + 1):
        for n in range(T + 1):
            if m == n == 0 and not b.include_excluded:
                continue
            s.check({"m": m, "n": n}, *_momiyama_sides(m, n))
    w = [_witness({"m": 0, "n": 0}, *_momiyama_sides(0, 0), note="both sums stop at k=m, k=n")]
    return _report(IdentityId.MOMIYAMA, {"m": [0, T], "n": [0, T], "excluded": [[0, 0]]}, s, w)


def _b_integral(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = integrate_poly(bernoulli_poly(n, "umbral", "z"), "z", _X, _Y)
        rhs = (bernoulli_poly(n + 1, "oracle", "y") - bernoulli_poly(n + 1, "oracle", "x")) / (n + 1)
        s.check({"n": n}, lhs, rhs)
    return _report(IdentityId.B_INTEGRAL, {"n": [0, b.index]}, s)


def _b_unit_interval(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = integrate_poly(bernoulli_poly(n, "umbral", "z"), "z", _X, _X + 1)
        s.check({"n": n}, lhs, _X**n)
    return _report(IdentityId.B_UNIT_INTERVAL, {"n": [0, b.index]}, s)


def _symm_binom(b: Bounds) -> IdentityReport:
    s = _Sweep()
    T = b.two_index
    for m in range(T + 1):
        for n in range(T + 1):
            lhs = sum((comb(m, k) * _B(n + k) for k in range(m + 1)), ExactScalar(0))
            rhs = sum((comb(n, k) * _Bu(m + k) for k in range(n + 1)), ExactScalar(0)) * (-1) ** (m + n)
            s.check({"m": m, "n": n}, lhs, rhs)
    return _report(IdentityId.SYMM_BINOM, {"m": [0, T], "n": [0, T]}, s)


def _chen(b: Bounds) -> IdentityReport:
    s1, s2 = _Sweep(), _Sweep()
    for n in range(1, b.index + 1):
        lhs1 = sum(
            (chen_k(k) * mpq(comb(2 * n - k, k) * 2 * n, 2 * n - k) for k in range(n + 1)),
            ExactScalar(0),
        )
        s1.check({"identity": 1, "n": n}, lhs1, -_Bu(2 * n))
        lhs2 = sum(
            (chen_k(k) * mpq(comb(2 * n - k - 1, k) * (2 * n - 1), 2 * n - k - 1) for k in range(n)),
            ExactScalar(0),
        )
        s2.check({"identity": 2, "n": n}, lhs2, _Bu(2 * n - 1))
    merged = _Sweep()
    merged.checked = s1.checked + s2.checked
    merged.counterexample = s1.counterexample or s2.counterexample
    sub = {
        "chen_1": "pass" if s1.counterexample is None else "fail",
        "chen_2": "pass" if s2.counterexample is None else "fail",
    }
    return _report(IdentityId.CHEN, {"n": [1, b.index]}, merged, subchecks=sub)


def _gessel_mult(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for a in b.gessel_a:
        for n in range(1, b.index + 1):
            total = sum(
                (
                    _Bu(k) * (a**k * comb(n, k)) * power_sum(n - k, a - 1, "direct")
                    for k in range(n)
                ),
                ExactScalar(0),
            )
            s.check({"a": a, "n": n}, _B(n), total * mpq(1, a * (1 - a**n)))
    return _report(IdentityId.GESSEL_MULT, {"a": list(b.gessel_a), "n": [1, b.index]}, s)


def _euler_reflect(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = euler_poly(n, "umbral").subs({"x": 1 - _X})
        s.check({"n": n}, lhs, euler_poly(n, "oracle") * (-1) ** n)
    return _report(IdentityId.EULER_REFLECT, {"n": [0, b.index]}, s)


def _euler_shift(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = MultiPoly.zero()
        for r in range(n + 1):
            lhs = lhs + euler_poly(r, "oracle") * comb(n, r)
        s.check({"n": n}, lhs, euler_poly(n, "umbral").subs({"x": _X + 1}))
    return _report(IdentityId.EULER_SHIFT, {"n": [0, b.index]}, s)


def _euler_even_sum_lhs(n: int) -> ExactScalar:
    return sum((euler_number(2 * r, "umbral") * comb(2 * n, 2 * r) for r in range(n + 1)), ExactScalar(0))


def _euler_even_sum(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(0 if b.include_excluded else 1, b.index + 1):
        s.check({"n": n}, _euler_even_sum_lhs(n), ExactScalar(0))
    w = [_witness({"n": 0}, _euler_even_sum_lhs(0), ExactScalar(0), note="empty-range case E_0 = 1")]
    return _report(IdentityId.EULER_EVEN_SUM, {"n": [1, b.index], "excluded": [0]}, s, w)


def _be_link_sum(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = bernoulli_poly(n, "umbral").subs({"x": (_X + _Y) * HALF})
        acc = PolyAccumulator()
        for k in range(n + 1):
            acc.add(bernoulli_poly(n - k, "oracle", "x") * euler_poly(k, "oracle", "y"), comb(n, k))
        s.check({"n": n}, lhs, acc.result() * mpq(1, 2**n))
    return _report(IdentityId.BE_LINK_SUM, {"n": [0, b.index]}, s)


def _be_link_int(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        lhs = integrate_poly(bernoulli_poly(n, "umbral", "z"), "z", _X, _X + HALF)
        rhs = euler_poly(n, "oracle").subs({"x": _X * 2}) * mpq(1, 2 ** (n + 1))
        s.check({"n": n}, lhs, rhs)
    return _report(IdentityId.BE_LINK_INT, {"n": [0, b.index]}, s)


def _euler_two_term(b: Bounds) -> IdentityReport:
    s = _Sweep()
    for n in range(b.index + 1):
        e = euler_poly(n, "umbral")
        s.check({"n": n}, e.subs({"x": _X + 1}) + e, _X**n * 2)
    return _report(IdentityId.EULER_TWO_TERM, {"n": [0, b.index]}, s)


# generating-function identities ------------------------------------------------

def _hermite_master_rhs(order: int, squared: bool) -> MultiPoly:
    wts = {"x": 1, "y": 1}
    q = _Y * _Y * 4 if squared else _Y * 4  # 1 + q
    inv = _inv_one_minus(-q, order, wts)
    expo = -(_X * _X).mul_trunc(inv, order, wts)
    return _inv_sqrt_one_minus(-q, order, wts).mul_trunc(series_exp(expo, order, wts), order, wts)


def _hermite_master(b: Bounds) -> IdentityReport:
    wts = {"x": 1, "y": 1}
    s = _Sweep()
    lhs = expect_exp_gauss(_X, _Y, b.order, wts)
    s.check({"order": b.order}, lhs, _hermite_master_rhs(b.order, squared=False))
    lhs2 = expect_exp_gauss(_X, _Y, 2, wts)
    w = [
        _witness(
            {"order": 2, "form": "1/sqrt(1+4y^2) exp(-x^2/(1+4y^2))"},
            lhs2,
            _hermite_master_rhs(2, squared=True),
            note="squared denominator 1+4y^2 is wrong",
        )
    ]
    return _report(
        IdentityId.HERMITE_MASTER,
        {"order": b.order, "form": "1/sqrt(1+4y) exp(-x^2/(1+4y))"},
        s,
        w,
    )


def _hermite_gf_even_rhs(order: int, sign: int) -> MultiPoly:
    wts = {"x": 1}
    u = MultiPoly.var("u")
    inv = _inv_one_minus(-_X * 4, order, wts)
    expo = (u * u * _X * (4 * sign)).mul_trunc(inv, order, wts)
    return _inv_sqrt_one_minus(-_X * 4, order, wts).mul_trunc(series_exp(expo, order, wts), order, wts)


def _hermite_gf_even_lhs(order: int) -> MultiPoly:
    acc = PolyAccumulator()
    for n in range(order + 1):
        acc.add(hermite(2 * n, "umbral") * MultiPoly.monomial({"x": n}), mpq(1, factorial(n)))
    return acc.result()


def _hermite_gf_even(b: Bounds) -> IdentityReport:
    s = _Sweep()
    s.check({"order": b.order}, _hermite_gf_even_lhs(b.order), _hermite_gf_even_rhs(b.order, +1))
    w = [
        _witness(
            {"order": 2, "form": "1/sqrt(1+4x) exp(-4u^2 x/(1+4x))"},
            _hermite_gf_even_lhs(2),
            _hermite_gf_even_rhs(2, -1),
            note="negative exponent is wrong",
        )
    ]
    return _report(
        IdentityId.HERMITE_GF_EVEN,
        {"order": b.order, "form": "1/sqrt(1+4x) exp(4u^2 x/(1+4x))"},
        s,
        w,
    )


def _divide_by(p: MultiPoly, var: str) -> MultiPoly:
    if not p.coeff_in(var, 0).is_zero():
        raise ArithmeticError(f"{p} is not divisible by {var}")
    acc = PolyAccumulator()
    for mono, c in p.terms():
        d = dict(mono)
        d[var] -= 1
        acc.add_monomial(d, c)
    return acc.result()


def _hermite_gf_bivar_rhs(order: int) -> MultiPoly:
    # exponent -y^2/(4x) + (2u sqrt(x) + y/(2 sqrt(x)))^2/(1+4x); with
    # (2u sqrt(x) + y/(2 sqrt(x)))^2 = (4u^2 x^2 + 2uxy + y^2/4)/x, over x(1+4x):
    wts = {"x": 1, "y": 1}
    u = MultiPoly.var("u")
    square_times_x = u * u * _X * _X * 4 + u * _X * _Y * 2 + _Y * _Y * mpq(1, 4)
    numerator = -(_Y * _Y * mpq(1, 4)) * (1 + _X * 4) + square_times_x
    expo = _divide_by(numerator, "x").mul_trunc(_inv_one_minus(-_X * 4, order, wts), order, wts)
    return _inv_sqrt_one_minus(-_X * 4, order, wts).mul_trunc(series_exp(expo, order, wts), order, wts)


def _hermite_gf_bivar(b: Bounds) -> IdentityReport:
    s = _Sweep()
    lhs = _egf2(lambda m, n: hermite(2 * m + n, "oracle"), b.order)
    s.check({"order": b.order}, lhs, _hermite_gf_bivar_rhs(b.order))
    return _report(IdentityId.HERMITE_GF_BIVAR, {"order": b.order}, s)


_CARLITZ_VARS = ("a", "b", "u", "v", "w")


def _carlitz_master(b: Bounds) -> IdentityReport:
    wts = {n: 1 for n in _CARLITZ_VARS}
    args = [MultiPoly.var(n) for n in _CARLITZ_VARS]
    s = _Sweep()
    lhs = expect_exp_quadratic(*args, order=b.order, weights=wts)
    s.check({"order": b.order}, lhs, master_closed_form(*args, b.order, wts))
    return _report(IdentityId.CARLITZ_MASTER, {"order": b.order, "grading": "total degree"}, s)


def _zeil_gf(b: Bounds) -> IdentityReport:
    wts = {"x": 1, "y": 1}
    s = _Sweep()
    lhs = _egf2(lambda m, n: zeilberger_hermite(m, n, "umbral"), b.order)
    w = MultiPoly.var("w")
    rhs = series_exp(_X + _Y + w * _X * _Y, b.order, wts)
    s.check({"order": b.order}, lhs, rhs)
    return _report(IdentityId.ZEIL_GF, {"order": b.order}, s)


def _zeil_bilinear_rhs(order: int) -> MultiPoly:
    # Z1 by E exp(A s + B t) = exp(st), then Z2 by the master lemma with
    # a = x(1+uy), b = vy(1+ux), Z conj(Z) coefficient uvxy.
    wts = {"x": 1, "y": 1}
    u, v = MultiPoly.var("u"), MultiPoly.var("v")
    a = _X * (1 + u * _Y)
    bb = v * _Y * (1 + u * _X)
    prefactor = series_exp(_X + _Y + u * _X * _Y, order, wts)
    return prefactor.mul_trunc(master_closed_form(a, bb, 0, u * v * _X * _Y, 0, order, wts), order, wts)


def _zeil_bilinear(b: Bounds) -> IdentityReport:
    s = _Sweep()
    lhs = _egf2(
        lambda m, n: zeilberger_hermite(m, n, "oracle", "u") * zeilberger_hermite(m, n, "umbral", "v"),
        b.order,
    )
    s.check({"order": b.order}, lhs, _zeil_bilinear_rhs(b.order))
    return _report(IdentityId.ZEIL_BILINEAR, {"order": b.order}, s)


_QVARS = ("v", "w", "x", "y", "t")


def _quintuple_lhs(order: int) -> MultiPoly:
    acc = PolyAccumulator()
    for i in range(order + 1):
        for j in range(order + 1 - i):
            for k in range(order + 1 - i - j):
                for l in range(order + 1 - i - j - k):
                    for m in range(order + 1 - i - j - k - l):
                        h = zeilberger_hermite(i + 2 * k + m, j + 2 * l + m, "oracle", "u")
                        mono = MultiPoly.monomial({"v": i, "w": j, "x": k, "y": l, "t": m})
                        den = factorial(i) * factorial(j) * factorial(k) * factorial(l) * factorial(m)
                        acc.add(h * mono, mpq(1, den))
    return acc.result()


def _quintuple_rhs(order: int) -> MultiPoly:
    wts = {n: 1 for n in _QVARS}
    u, v, w, x, y, t = (MultiPoly.var(n) for n in ("u",) + _QVARS)
    X = u * t * 2 - u * u * t * t + u * u * x * y * 4  # D = (1-ut)^2 - 4u^2 xy = 1 - X
    num = (1 + u * w) ** 2 * x + (1 + u * v) ** 2 * y + u * x * y * 4 + (1 - u * t) * (v + w + t + u * v * w)
    expo = num.mul_trunc(_inv_one_minus(X, order, wts), order, wts)
    return _inv_sqrt_one_minus(X, order, wts).mul_trunc(series_exp(expo, order, wts), order, wts)


def _quintuple_expectation(order: int) -> MultiPoly:
    # E exp[v(1+Z) + w(1+u Zb) + x(1+Z)^2 + y(1+u Zb)^2 + t(1+Z)(1+u Zb)]
    wts = {n: 1 for n in _QVARS}
    u, v, w, x, y, t = (MultiPoly.var(n) for n in ("u",) + _QVARS)
    e = expect_exp_quadratic(
        a=v + x * 2 + t, b=u * (w + y * 2 + t), u=x, v=u * t, w=u * u * y, order=order, weights=wts
    )
    return series_exp(v + w + x + y + t, order, wts).mul_trunc(e, order, wts)


def _quintuple(b: Bounds) -> IdentityReport:
    Q = b.quintuple_order
    s = _Sweep()
    lhs = _quintuple_lhs(Q)
    s.check({"total_index": Q, "route": "closed form"}, lhs, _quintuple_rhs(Q))
    s.check({"total_index": Q, "route": "circular-normal expectation"}, lhs, _quintuple_expectation(Q))
    # diagonal slice v = w = x = y = 0
    wts = {"t": 1}
    u, t = MultiPoly.var("u"), MultiPoly.var("t")
    acc = PolyAccumulator()
    for m in range(b.order + 1):
        acc.add(zeilberger_hermite(m, m, "umbral", "u") * t**m, mpq(1, factorial(m)))
    inv = _inv_one_minus(u * t, b.order, wts)
    diag_rhs = inv.mul_trunc(series_exp(t.mul_trunc(inv, b.order, wts), b.order, wts), b.order, wts)
    diag_ok = s.check({"slice": "diagonal", "order": b.order}, acc.result(), diag_rhs)
    return _report(
        IdentityId.QUINTUPLE,
        {"total_index": Q, "diagonal_order": b.order},
        s,
        subchecks={"diagonal": "pass" if diag_ok else "fail"},
    )


def _report(id_, range_, sweep: _Sweep, witnesses=(), subchecks=None) -> IdentityReport:
    return IdentityReport(
        id=id_,
        range=range_,
        status="pass" if sweep.counterexample is None else "fail",
        counterexample=sweep.counterexample,
        checked=sweep.checked,
        witnesses=list(witnesses),
        subchecks=subchecks or {},
    )


@dataclass(frozen=True)
class IdentitySpec:
    id: IdentityId
    statement: str
    kind: str  # "index" or "series"
    check: Callable[[Bounds], IdentityReport]


REGISTRY: dict[IdentityId, IdentitySpec] = {
    s.id: s
    for s in [
        IdentitySpec(IdentityId.GESSEL_72, "(B+1)^n = B^n, n != 1", "index", _gessel_72),
        IdentitySpec(IdentityId.REFLECT_B, "(B+1)^n = (-1)^n B^n, n != 1", "index", _reflect_b),
        IdentitySpec(IdentityId.KANEKO, "sum_i C(n+1,i)(n+i+1) B_{n+i} = 0", "index", _kaneko),
        IdentitySpec(
            IdentityId.MOMIYAMA,
            "(-1)^m sum_{k<=m} C(m+1,k)(n+k+1)B_{n+k} = (-1)^{n+1} sum_{k<=n} C(n+1,k)(m+k+1)B_{m+k}",
            "index",
            _momiyama,
        ),
        IdentitySpec(IdentityId.B_INTEGRAL, "int_x^y B_n = (B_{n+1}(y) - B_{n+1}(x))/(n+1)", "index", _b_integral),
        IdentitySpec(IdentityId.B_UNIT_INTERVAL, "int_x^{x+1} B_n = x^n", "index", _b_unit_interval),
        IdentitySpec(
            IdentityId.SYMM_BINOM,
            "sum_k C(m,k) B_{n+k} = (-1)^{m+n} sum_k C(n,k) B_{m+k}",
            "index",
            _symm_binom,
        ),
        IdentitySpec(IdentityId.CHEN, "both K_n identities", "index", _chen),
        IdentitySpec(
            IdentityId.GESSEL_MULT,
            "B_n = sum_{k<n} a^k C(n,k) B_k S_{n-k}(a-1) / (a(1-a^n))",
            "index",
            _gessel_mult,
        ),
        IdentitySpec(IdentityId.EULER_REFLECT, "E_n(1-x) = (-1)^n E_n(x)", "index", _euler_reflect),
        IdentitySpec(IdentityId.EULER_SHIFT, "sum_r C(n,r) E_r(x) = E_n(x+1)", "index", _euler_shift),
        IdentitySpec(IdentityId.EULER_EVEN_SUM, "sum_r C(2n,2r) E_{2r} = 0", "index", _euler_even_sum),
        IdentitySpec(
            IdentityId.BE_LINK_SUM,
            "B_n((x+y)/2) = 2^-n sum_k C(n,k) B_{n-k}(x) E_k(y)",
            "index",
            _be_link_sum,
        ),
        IdentitySpec(IdentityId.BE_LINK_INT, "int_x^{x+1/2} B_n = E_n(2x)/2^{n+1}", "index", _be_link_int),
        IdentitySpec(IdentityId.EULER_TWO_TERM, "E_n(x+1) + E_n(x) = 2x^n", "index", _euler_two_term),
        IdentitySpec(IdentityId.HERMITE_MASTER, "e^{Mx+M^2y} = exp(-x^2/(1+4y))/sqrt(1+4y)", "series", _hermite_master),
        IdentitySpec(
            IdentityId.HERMITE_GF_EVEN,
            "sum H_{2n}(u) x^n/n! = exp(4u^2x/(1+4x))/sqrt(1+4x)",
            "series",
            _hermite_gf_even,
        ),
        IdentitySpec(
            IdentityId.HERMITE_GF_BIVAR,
            "sum H_{2m+n}(u) x^m/m! y^n/n! = e^{-y^2/4x} exp((2u sqrt x + y/(2 sqrt x))^2/(1+4x))/sqrt(1+4x)",
            "series",
            _hermite_gf_bivar,
        ),
        IdentitySpec(
            IdentityId.CARLITZ_MASTER,
            "E exp(Za + Zb b + Z^2 u + Z Zb v + Zb^2 w) = D^-1/2 exp((a^2w + b^2u + ab(1-v))/D)",
            "series",
            _carlitz_master,
        ),
        IdentitySpec(IdentityId.ZEIL_GF, "sum H_{m,n}(w) x^m/m! y^n/n! = exp(x+y+wxy)", "series", _zeil_gf),
        IdentitySpec(
            IdentityId.ZEIL_BILINEAR,
            "sum H_{m,n}(u) H_{m,n}(v) x^m/m! y^n/n! = exp(x+y+uxy + vxy(1+ux)(1+uy)/(1-uvxy))/(1-uvxy)",
            "series",
            _zeil_bilinear,
        ),
        IdentitySpec(IdentityId.QUINTUPLE, "five-fold generating function of H_{i+2k+m, j+2l+m}(u)", "series", _quintuple),
    ]
}


def verify(id_: IdentityId | str, bounds: Bounds | None = None) -> IdentityReport:
    """Check one identity exactly over ``bounds``; failures are reported, not raised."""
    id_ = IdentityId(str(id_))
    bounds = bounds or PROFILES["quick"]
    start = time.perf_counter()
    report = REGISTRY[id_].check(bounds)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _verify_pair(args):
    return verify(*args)


def verify_all(profile: str | Bounds = "quick", ids: Iterable | None = None, jobs: int = 1) -> list[IdentityReport]:
    """Run every registry entry (or ``ids``), ordered as in the registry."""
    bounds = PROFILES[profile] if isinstance(profile, str) else profile
    selected = [IdentityId(str(i)) for i in ids] if ids is not None else list(REGISTRY)
    order = {k: n for n, k in enumerate(REGISTRY)}
    selected.sort(key=order.__getitem__)
    if jobs > 1 and len(selected) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_pair, [(i, bounds) for i in selected]))
    return [verify(i, bounds) for i in selected]
