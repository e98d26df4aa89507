"""Sparse multivariate polynomials over Q(i).

Exponent vectors are packed into a single Python int, ``_SHIFT`` bits per
indeterminate, over the sorted tuple of indeterminate names.  Monomial
multiplication is then integer addition, which is what keeps the identity
sweeps fast.  Real and imaginary coefficient parts live in separate dicts so
the (common) purely real case never pays for complex products.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping

from gmpy2 import mpq

from .errors import CompositionNonNilpotent, DegreeOverflow
from .exact import ExactScalar, as_rational, as_scalar, format_rational

__all__ = ["MultiPoly", "Monomial", "PolyAccumulator", "series_exp", "series_compose"]

_SHIFT = 20
_MASK = (1 << _SHIFT) - 1
_MAX_EXP = _MASK

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by name

_ZERO_Q = mpq(0)


def _unpack(key: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(key & _MASK)
        key >>= _SHIFT
    return tuple(out)


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0:
            raise ValueError("negative exponent")
        if e > _MAX_EXP:
            raise DegreeOverflow(f"exponent {e} exceeds {_MAX_EXP}")
        key |= e << (_SHIFT * i)
    return key


def _rekey(d: dict, old_vars: tuple, new_vars: tuple) -> dict:
    """Re-pack keys from ``old_vars`` layout to ``new_vars`` (a superset)."""
    if old_vars == new_vars or not d:
        return d
    n = len(old_vars)
    shifts = [_SHIFT * new_vars.index(v) for v in old_vars]
    out = {}
    for key, c in d.items():
        nk = 0
        for s in shifts:
            nk |= (key & _MASK) << s
            key >>= _SHIFT
        out[nk] = c
    return out


def _dadd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c if sign > 0 else -c
        else:
            v = v + c if sign > 0 else v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def _dmul(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            v = get(k)
            out[k] = ca * cb if v is None else v + ca * cb
    return {k: v for k, v in out.items() if v}


def _buckets(d: dict, grade) -> dict:
    out = defaultdict(list)
    for k, c in d.items():
        out[grade(k)].append((k, c))
    return out


def _dmul_trunc(a: dict, b: dict, grade, order: int) -> dict:
    ba, bb = _buckets(a, grade), _buckets(b, grade)
    out: dict = {}
    get = out.get
    for ga, ta in ba.items():
        if ga > order:
            continue
        for gb, tb in bb.items():
            if ga + gb > order:
                continue
            for ka, ca in ta:
                for kb, cb in tb:
                    k = ka + kb
                    v = get(k)
                    out[k] = ca * cb if v is None else v + ca * cb
    return {k: v for k, v in out.items() if v}


class MultiPoly:
    """Immutable sparse polynomial in named indeterminates over Q(i).

    Canonical form: only indeterminates that actually occur are kept in the
    layout and no zero coefficient is stored, so ``==`` is a structural
    comparison.  The zero polynomial has no terms.
    """

    __slots__ = ("_vars", "_re", "_im")

    def __init__(self, terms: Mapping | Iterable | None = None):
        """Build from ``{monomial: coeff}`` where a monomial is a mapping or an
        iterable of ``(name, power)`` pairs."""
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                mono = _normalize_monomial(mono)
                c = as_scalar(c)
                acc[mono] = acc.get(mono, 0) + c if mono in acc else c
        names = sorted({n for mono in acc for n, _ in mono})
        vars_ = tuple(names)
        index = {n: i for i, n in enumerate(vars_)}
        re, im = {}, {}
        for mono, c in acc.items():
            key = _pack_dict({index[n]: e for n, e in mono}, len(vars_))
            if c.re:
                re[key] = c.re
            if c.im:
                im[key] = c.im
        self._set(vars_, re, im)

    def _set(self, vars_, re, im):
        object.__setattr__(self, "_vars", vars_)
        object.__setattr__(self, "_re", re)
        object.__setattr__(self, "_im", im)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def _make(cls, vars_: tuple, re: dict, im: dict) -> MultiPoly:
        """Build from packed dicts, dropping indeterminates that no longer occur."""
        mask = 0
        for k in re:
            mask |= k
        for k in im:
            mask |= k
        if vars_:
            used = [i for i in range(len(vars_)) if (mask >> (_SHIFT * i)) & _MASK]
            if len(used) != len(vars_):
                new_vars = tuple(vars_[i] for i in used)
                re = _squeeze(re, used)
                im = _squeeze(im, used)
                vars_ = new_vars
        obj = object.__new__(cls)
        obj._set(vars_, re, im)
        return obj

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls) -> MultiPoly:
        return cls._make((), {}, {})

    @classmethod
    def one(cls) -> MultiPoly:
        return cls.const(1)

    @classmethod
    def const(cls, c) -> MultiPoly:
        c = as_scalar(c)
        re = {0: c.re} if c.re else {}
        im = {0: c.im} if c.im else {}
        return cls._make((), re, im)

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls._make((name,), {1: mpq(1)}, {})

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff=1) -> MultiPoly:
        return cls({_normalize_monomial(powers): coeff})

    # inspection -----------------------------------------------------------
    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    def __len__(self):
        return len(self._re.keys() | self._im.keys())

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def is_constant(self) -> bool:
        return not self._vars

    def terms(self) -> Iterator[tuple[Monomial, ExactScalar]]:
        """Yield ``(monomial, coeff)`` pairs in a deterministic order."""
        n = len(self._vars)
        keys = sorted(self._re.keys() | self._im.keys(), key=lambda k: _unpack(k, n)[::-1])
        for k in keys:
            exps = _unpack(k, n)
            mono = tuple((v, e) for v, e in zip(self._vars, exps) if e)
            yield mono, ExactScalar._raw(self._re.get(k, _ZERO_Q), self._im.get(k, _ZERO_Q))

    def as_dict(self) -> dict[Monomial, ExactScalar]:
        return dict(self.terms())

    def coeff(self, powers: Mapping[str, int] | Iterable = ()) -> ExactScalar:
        """Coefficient of one monomial (zero if absent)."""
        mono = dict(_normalize_monomial(powers))
        if any(n not in self._vars for n in mono):
            return ExactScalar(0)
        key = _pack(mono.get(v, 0) for v in self._vars)
        return ExactScalar._raw(self._re.get(key, _ZERO_Q), self._im.get(key, _ZERO_Q))

    def constant_term(self) -> ExactScalar:
        return ExactScalar._raw(self._re.get(0, _ZERO_Q), self._im.get(0, _ZERO_Q))

    def to_scalar(self) -> ExactScalar:
        if self._vars:
            raise ValueError(f"polynomial {self} is not constant")
        return self.constant_term()

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var``, or total degree; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        n = len(self._vars)
        keys = self._re.keys() | self._im.keys()
        if var is None:
            return max(sum(_unpack(k, n)) for k in keys)
        if var not in self._vars:
            return 0
        s = _SHIFT * self._vars.index(var)
        return max((k >> s) & _MASK for k in keys)

    def coeff_in(self, var: str, power: int) -> MultiPoly:
        """Coefficient of ``var**power`` as a polynomial in the other variables."""
        if var not in self._vars:
            return self if power == 0 else MultiPoly.zero()
        i = self._vars.index(var)
        s = _SHIFT * i
        target = power << s
        sel = lambda d: {k - target: c for k, c in d.items() if (k >> s) & _MASK == power}
        return MultiPoly._make(self._vars, sel(self._re), sel(self._im))

    def real_part(self) -> MultiPoly:
        return MultiPoly._make(self._vars, dict(self._re), {})

    def imag_part(self) -> MultiPoly:
        return MultiPoly._make(self._vars, dict(self._im), {})

    def conjugate(self) -> MultiPoly:
        return MultiPoly._make(self._vars, dict(self._re), {k: -c for k, c in self._im.items()})

    # arithmetic -----------------------------------------------------------
    def _aligned(self, other: MultiPoly):
        if self._vars == other._vars:
            return self._vars, self._re, self._im, other._re, other._im
        vars_ = tuple(sorted(set(self._vars) | set(other._vars)))
        return (
            vars_,
            _rekey(self._re, self._vars, vars_),
            _rekey(self._im, self._vars, vars_),
            _rekey(other._re, other._vars, vars_),
            _rekey(other._im, other._vars, vars_),
        )

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        v, r1, i1, r2, i2 = self._aligned(other)
        return MultiPoly._make(v, _dadd(r1, r2), _dadd(i1, i2))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        v, r1, i1, r2, i2 = self._aligned(other)
        return MultiPoly._make(v, _dadd(r1, r2, -1), _dadd(i1, i2, -1))

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return MultiPoly._make(
            self._vars, {k: -c for k, c in self._re.items()}, {k: -c for k, c in self._im.items()}
        )

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return self._mul(other, None)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_scalar(other)
        return self.scale(ExactScalar(1) / c)

    def scale(self, c) -> MultiPoly:
        c = as_scalar(c)
        if c.is_zero():
            return MultiPoly.zero()
        a, b = c.re, c.im
        re, im = {}, {}
        for k, x in self._re.items():
            if a:
                re[k] = x * a
            if b:
                im[k] = x * b
        for k, y in self._im.items():
            if b:
                v = re.get(k, _ZERO_Q) - y * b
                if v:
                    re[k] = v
                else:
                    re.pop(k, None)
            if a:
                v = im.get(k, _ZERO_Q) + y * a
                if v:
                    im[k] = v
                else:
                    im.pop(k, None)
        return MultiPoly._make(self._vars, re, im)

    def _check_overflow(self, other: MultiPoly, vars_: tuple):
        for v in vars_:
            if self.degree(v) + other.degree(v) > _MAX_EXP:
                raise DegreeOverflow(f"degree in {v} exceeds {_MAX_EXP}")

    def _mul(self, other: MultiPoly, trunc) -> MultiPoly:
        if self.is_zero() or other.is_zero():
            return MultiPoly.zero()
        v, r1, i1, r2, i2 = self._aligned(other)
        if max(self.degree(), 0) + max(other.degree(), 0) > _MAX_EXP:
            self._check_overflow(other, v)
        if trunc is None:
            mul = _dmul
        else:
            grade = _grade_fn(v, trunc[1])
            order = trunc[0]
            mul = lambda a, b: _dmul_trunc(a, b, grade, order)
        re = mul(r1, r2) if r1 and r2 else {}
        im = {}
        if i1 and i2:
            re = _dadd(re, mul(i1, i2), -1)
        if r1 and i2:
            im = mul(r1, i2)
        if i1 and r2:
            im = _dadd(im, mul(i1, r2))
        return MultiPoly._make(v, re, im)

    def mul_trunc(self, other: MultiPoly, order: int, weights: Mapping[str, int]) -> MultiPoly:
        """Product keeping only terms of weighted degree <= ``order``.

        ``weights`` maps series variables to positive integer weights; all
        other indeterminates are coefficients and carry weight zero.
        """
        other = _as_poly(other)
        return self._mul(other, (order, weights))

    def truncate(self, order: int, weights: Mapping[str, int]) -> MultiPoly:
        grade = _grade_fn(self._vars, weights)
        re = {k: c for k, c in self._re.items() if grade(k) <= order}
        im = {k: c for k, c in self._im.items() if grade(k) <= order}
        return MultiPoly._make(self._vars, re, im)

    def grade_parts(self, weights: Mapping[str, int]) -> dict[int, MultiPoly]:
        """Split into weighted-homogeneous components ``{grade: part}``."""
        grade = _grade_fn(self._vars, weights)
        parts: dict[int, tuple[dict, dict]] = defaultdict(lambda: ({}, {}))
        for k, c in self._re.items():
            parts[grade(k)][0][k] = c
        for k, c in self._im.items():
            parts[grade(k)][1][k] = c
        return {g: MultiPoly._make(self._vars, re, im) for g, (re, im) in sorted(parts.items())}

    def min_grade(self, weights: Mapping[str, int]) -> int:
        grade = _grade_fn(self._vars, weights)
        keys = self._re.keys() | self._im.keys()
        return min((grade(k) for k in keys), default=0)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def pow_trunc(self, n: int, order: int, weights: Mapping[str, int]) -> MultiPoly:
        result = MultiPoly.one()
        base = self.truncate(order, weights)
        while n:
            if n & 1:
                result = result.mul_trunc(base, order, weights)
            n >>= 1
            if n:
                base = base.mul_trunc(base, order, weights)
        return result

    # calculus and substitution -------------------------------------------
    def diff(self, var: str) -> MultiPoly:
        if var not in self._vars:
            return MultiPoly.zero()
        s = _SHIFT * self._vars.index(var)
        unit = 1 << s

        def d(src):
            out = {}
            for k, c in src.items():
                e = (k >> s) & _MASK
                if e:
                    out[k - unit] = c * e
            return out

        return MultiPoly._make(self._vars, d(self._re), d(self._im))

    def antiderivative(self, var: str) -> MultiPoly:
        """Antiderivative in ``var`` with zero constant of integration."""
        vars_ = self._vars if var in self._vars else tuple(sorted(self._vars + (var,)))
        re = _rekey(self._re, self._vars, vars_)
        im = _rekey(self._im, self._vars, vars_)
        s = _SHIFT * vars_.index(var)
        unit = 1 << s

        def a(src):
            out = {}
            for k, c in src.items():
                e = (k >> s) & _MASK
                out[k + unit] = c / (e + 1)
            return out

        return MultiPoly._make(vars_, a(re), a(im))

    def subs(self, mapping: Mapping[str, object]) -> MultiPoly:
        """Substitute polynomials (or scalars) for indeterminates, simultaneously."""
        mapping = {k: _as_poly_strict(v) for k, v in mapping.items() if k in self._vars}
        if not mapping:
            return self
        n = len(self._vars)
        targets = [i for i, v in enumerate(self._vars) if v in mapping]
        keep = [i for i in range(n) if i not in targets]
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(i, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = mapping[self._vars[i]] ** e
            return power_cache[key]

        # group by the exponents of substituted variables
        groups: dict[tuple[int, ...], list] = defaultdict(list)
        for mono, c in self.terms():
            d = dict(mono)
            sub_exps = tuple(d.get(self._vars[i], 0) for i in targets)
            rest = {self._vars[i]: d[self._vars[i]] for i in keep if self._vars[i] in d}
            groups[sub_exps].append((rest, c))
        result = MultiPoly.zero()
        for sub_exps, items in groups.items():
            factor = MultiPoly.one()
            for i, e in zip(targets, sub_exps):
                if e:
                    factor = factor * power(i, e)
            result = result + factor * MultiPoly(items)
        return result

    def evaluate(self, values: Mapping[str, object]):
        """Substitute values; returns an ``ExactScalar`` if nothing free remains."""
        out = self.subs(values)
        return out.to_scalar() if out.is_constant() else out

    def rename(self, mapping: Mapping[str, str]) -> MultiPoly:
        return self.subs({k: MultiPoly.var(v) for k, v in mapping.items()})

    # comparison / rendering ----------------------------------------------
    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._vars == other._vars and self._re == other._re and self._im == other._im

    def __hash__(self):
        return hash((self._vars, frozenset(self._re.items()), frozenset(self._im.items())))

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        n = len(self._vars)
        keys = sorted(
            self._re.keys() | self._im.keys(),
            key=lambda k: (-sum(_unpack(k, n)), tuple(-e for e in _unpack(k, n))),
        )
        parts = []
        for k in keys:
            c = ExactScalar._raw(self._re.get(k, _ZERO_Q), self._im.get(k, _ZERO_Q))
            exps = _unpack(k, n)
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self._vars, exps) if e
            )
            parts.append(_term_str(c, mono))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def to_json(self) -> list:
        """List of ``{"monomial": {name: power}, "coeff": ...}`` entries."""
        return [{"monomial": dict(m), "coeff": c.to_json()} for m, c in self.terms()]

    @classmethod
    def from_json(cls, data: list) -> MultiPoly:
        return cls({tuple(sorted(d["monomial"].items())): ExactScalar.from_json(d["coeff"]) for d in data})


def _term_str(c: ExactScalar, mono: str) -> str:
    if not mono:
        return f"({c})" if c.re and c.im else str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    if c.re and c.im:
        return f"({c})*{mono}"
    return f"{c}*{mono}"


def _normalize_monomial(mono) -> Monomial:
    items = mono.items() if isinstance(mono, Mapping) else mono
    acc: dict[str, int] = {}
    for name, e in items:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"bad exponent {e!r} for {name!r}")
        if e:
            acc[name] = acc.get(name, 0) + e
    return tuple(sorted(acc.items()))


def _pack_dict(d: Mapping[int, int], n: int) -> int:
    return _pack(d.get(i, 0) for i in range(n))


def _squeeze(d: dict, used: list[int]) -> dict:
    out = {}
    for k, c in d.items():
        nk = 0
        for j, i in enumerate(used):
            nk |= ((k >> (_SHIFT * i)) & _MASK) << (_SHIFT * j)
        out[nk] = c
    return out


def _grade_fn(vars_: tuple, weights: Mapping[str, int]):
    ws = [(_SHIFT * i, weights[v]) for i, v in enumerate(vars_) if weights.get(v)]
    if not ws:
        return lambda k: 0
    if len(ws) == 1:
        (s, w), = ws
        return lambda k: ((k >> s) & _MASK) * w

    def grade(k):
        g = 0
        for s, w in ws:
            g += ((k >> s) & _MASK) * w
        return g

    return grade


def _as_poly(value):
    if isinstance(value, MultiPoly):
        return value
    try:
        return MultiPoly.const(value)
    except TypeError:
        return NotImplemented


def _as_poly_strict(value) -> MultiPoly:
    out = _as_poly(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return out


# multivariate truncated series ---------------------------------------------

def series_exp(p: MultiPoly, order: int, weights: Mapping[str, int]) -> MultiPoly:
    """``exp(p)`` truncated at weighted degree ``order``.

    Uses the graded recurrence ``k F_k = sum_j j P_j F_{k-j}``, so the cost
    is one pass of products against the (usually sparse) argument.  The
    grade-0 part of ``p`` must vanish.
    """
    parts = p.truncate(order, weights).grade_parts(weights)
    if 0 in parts and not parts[0].is_zero():
        raise CompositionNonNilpotent("exp argument has a nonzero grade-0 part")
    F = [MultiPoly.one()]
    for k in range(1, order + 1):
        acc = PolyAccumulator(p.variables)
        for j, pj in parts.items():
            if 1 <= j <= k and not F[k - j].is_zero():
                acc.add(pj * F[k - j], mpq(j, k))
        F.append(acc.result())
    total = PolyAccumulator(p.variables)
    for f in F:
        total.add(f)
    return total.result()


def series_compose(coeffs, p: MultiPoly, order: int, weights: Mapping[str, int]) -> MultiPoly:
    """``sum_k coeffs[k] * p**k`` truncated (Horner); ``p`` needs zero grade-0 part."""
    if p.min_grade(weights) == 0 and not p.truncate(0, weights).is_zero():
        raise CompositionNonNilpotent("composition argument has a nonzero grade-0 part")
    mg = p.min_grade(weights) or 1
    n = min(len(coeffs) - 1, order // mg)
    out = MultiPoly.const(coeffs[n])
    for k in range(n - 1, -1, -1):
        out = out.mul_trunc(p, order, weights) + MultiPoly.const(coeffs[k])
    return out


class PolyAccumulator:
    """Mutable running sum of polynomials over a fixed indeterminate layout.

    Summing thousands of terms through immutable ``+`` copies the whole dict
    each time; this keeps one dict per coefficient part instead.
    """

    def __init__(self, variables: Iterable[str] = ()):
        self._vars = tuple(sorted(set(variables)))
        self._re: dict = {}
        self._im: dict = {}

    def _widen(self, extra):
        new_vars = tuple(sorted(set(self._vars) | set(extra)))
        self._re = _rekey(self._re, self._vars, new_vars)
        self._im = _rekey(self._im, self._vars, new_vars)
        self._vars = new_vars

    def add(self, p: MultiPoly, coeff=None):
        if coeff is not None:
            p = p.scale(coeff)
        if not set(p._vars) <= set(self._vars):
            self._widen(p._vars)
        for src, dst in ((p._re, self._re), (p._im, self._im)):
            if not src:
                continue
            get = dst.get
            for k, c in _rekey(src, p._vars, self._vars).items():
                v = get(k)
                dst[k] = c if v is None else v + c

    def add_monomial(self, powers: Mapping[str, int], coeff):
        c = as_scalar(coeff)
        if not set(powers) <= set(self._vars):
            self._widen(powers)
        key = _pack(powers.get(v, 0) for v in self._vars)
        for part, dst in ((c.re, self._re), (c.im, self._im)):
            if part:
                v = dst.get(key)
                dst[key] = part if v is None else v + part

    def result(self) -> MultiPoly:
        re = {k: c for k, c in self._re.items() if c}
        im = {k: c for k, c in self._im.items() if c}
        return MultiPoly._make(self._vars, re, im)
