"""Seeded Monte Carlo checks of the distributional claims, plus quadrature.

Everything here is double precision.  Base variables are built from
uniforms drawn with ``numpy.random.default_rng(seed)``:

* U: ``rng.random() + 2**-54``, so it lies strictly inside (0, 1)
* exponential: ``-log(U)``
* Cauchy: ``tan(pi (U - 1/2))``
* Gaussian: Box-Muller, ``sqrt(-2 log U1) cos(2 pi U2)``

The same (spec, seed, count) therefore always gives the same stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import integrate, stats

from .errors import MomentTooHigh, QuadratureNonConvergent

__all__ = [
    "Target",
    "Construction",
    "SamplerSpec",
    "SampleStats",
    "KSResult",
    "sample",
    "mc_moment",
    "ks_check",
    "quad_bernoulli_even",
    "CDFS",
    "KS_CRITICAL",
    "MOMENT_CAP",
]

MOMENT_CAP = 8
KS_CRITICAL = 1.949  # asymptotic level about 0.001
_OPEN = 2.0**-54


class Target(str, Enum):
    LogisticL = "LogisticL"
    SechL0 = "SechL0"
    LaplaceViaGauss = "LaplaceViaGauss"
    CompoundHalf = "CompoundHalf"


class Construction(str, Enum):
    log_uniform_ratio = "log_uniform_ratio"
    log_exp_ratio = "log_exp_ratio"
    log_abs_cauchy = "log_abs_cauchy"
    log_abs_gauss_ratio = "log_abs_gauss_ratio"
    gauss_over_sqrt_exp = "gauss_over_sqrt_exp"
    gauss_times_sqrt_exp = "gauss_times_sqrt_exp"
    average_L0_L = "average_L0_L"


_ALLOWED = {
    Target.LogisticL: {Construction.log_uniform_ratio, Construction.log_exp_ratio},
    Target.SechL0: {Construction.log_abs_cauchy, Construction.log_abs_gauss_ratio},
    Target.LaplaceViaGauss: {Construction.gauss_over_sqrt_exp, Construction.gauss_times_sqrt_exp},
    Target.CompoundHalf: {Construction.average_L0_L},
}

_DEFAULT_CONSTRUCTION = {
    Target.LogisticL: Construction.log_uniform_ratio,
    Target.SechL0: Construction.log_abs_cauchy,
    Target.LaplaceViaGauss: Construction.gauss_times_sqrt_exp,
    Target.CompoundHalf: Construction.average_L0_L,
}


@dataclass(frozen=True)
class SamplerSpec:
    target: Target
    construction: Construction | None = None
    seed: int = 42

    def __post_init__(self):
        target = Target(self.target)
        object.__setattr__(self, "target", target)
        c = self.construction
        c = _DEFAULT_CONSTRUCTION[target] if c is None else Construction(c)
        if c not in _ALLOWED[target]:
            raise ValueError(f"construction {c.value} does not realize {target.value}")
        object.__setattr__(self, "construction", c)
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SampleStats:
    count: int
    estimate: complex
    std_error: float  # of the real part
    std_error_imag: float = 0.0

    def within(self, exact: complex, k: float = 5.0) -> bool:
        """Both components within ``k`` standard errors of ``exact``."""
        exact = complex(exact)
        ok_re = abs(self.estimate.real - exact.real) <= k * self.std_error
        ok_im = abs(self.estimate.imag - exact.imag) <= k * self.std_error_imag
        return bool(ok_re and ok_im)


@dataclass(frozen=True)
class KSResult:
    count: int
    statistic: float
    scaled: float
    passed: bool
    cdf: str


class _Draws:
    def __init__(self, seed: int):
        self.rng = np.random.default_rng(int(seed))

    def uniform(self, n):
        return self.rng.random(n) + _OPEN

    def exponential(self, n):
        return -np.log(self.uniform(n))

    def cauchy(self, n):
        return np.tan(np.pi * (self.uniform(n) - 0.5))

    def gauss(self, n):
        u1, u2 = self.uniform(n), self.uniform(n)
        return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)


def _draw(c: Construction, d: _Draws, n: int) -> np.ndarray:
    if c is Construction.log_uniform_ratio:
        u = d.uniform(n)
        return np.log(u / (1.0 - u)) / (2 * np.pi)
    if c is Construction.log_exp_ratio:
        return (np.log(d.exponential(n)) - np.log(d.exponential(n))) / (2 * np.pi)
    if c is Construction.log_abs_cauchy:
        return np.log(np.abs(d.cauchy(n))) / np.pi
    if c is Construction.log_abs_gauss_ratio:
        return (np.log(np.abs(d.gauss(n))) - np.log(np.abs(d.gauss(n)))) / np.pi
    if c is Construction.gauss_over_sqrt_exp:
        return d.gauss(n) / np.sqrt(2.0 * d.exponential(n))
    if c is Construction.gauss_times_sqrt_exp:
        return d.gauss(n) * np.sqrt(2.0 * d.exponential(n))
    if c is Construction.average_L0_L:
        l0 = _draw(Construction.log_abs_cauchy, d, n)
        return 0.5 * (l0 + _draw(Construction.log_uniform_ratio, d, n))
    raise ValueError(c)


def sample(spec: SamplerSpec, count: int) -> np.ndarray:
    """``count`` i.i.d. draws from ``spec``'s construction."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return _draw(spec.construction, _Draws(spec.seed), int(count))


def mc_moment(spec: SamplerSpec, n: int, shift: float = 0.0, count: int = 10**6, seed: int | None = None) -> SampleStats:
    """Estimate ``E(i X + shift)^n`` for X drawn from ``spec``.

    Moments above :data:`MOMENT_CAP` are refused: the heavy tails of these
    laws make the variance of high powers too large to be useful.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MOMENT_CAP:
        raise MomentTooHigh(f"moment order {n} exceeds cap {MOMENT_CAP}")
    if count < 2:
        raise ValueError("count must be > 1")
    if seed is not None:
        spec = SamplerSpec(spec.target, spec.construction, seed)
    z = (1j * sample(spec, count) + shift) ** n
    se = lambda a: float(np.std(a, ddof=1) / np.sqrt(count))
    return SampleStats(count, complex(z.mean()), se(z.real), se(z.imag))


def _cdf_logistic(x):
    return 0.5 * (1.0 + np.tanh(np.pi * x))


def _cdf_sech(x):
    return (2.0 / np.pi) * np.arctan(np.exp(np.pi * x))


def _cdf_laplace(x):
    return np.where(x < 0, 0.5 * np.exp(np.minimum(x, 0)), 1.0 - 0.5 * np.exp(-np.maximum(x, 0)))


CDFS = {"L": _cdf_logistic, "L0": _cdf_sech, "laplace": _cdf_laplace}

_TARGET_CDF = {
    Target.LogisticL: "L",
    Target.SechL0: "L0",
    Target.LaplaceViaGauss: "laplace",
    Target.CompoundHalf: "L",
}


def ks_check(spec: SamplerSpec, count: int = 10**5, seed: int | None = None, cdf: str | None = None) -> KSResult:
    """One-sample KS test against the target's CDF (or ``cdf`` by name)."""
    if count < 10**4:
        raise ValueError("ks_check needs count >= 10^4")
    if seed is not None:
        spec = SamplerSpec(spec.target, spec.construction, seed)
    name = cdf or _TARGET_CDF[spec.target]
    d = float(stats.kstest(sample(spec, count), CDFS[name]).statistic)
    scaled = d * np.sqrt(count)
    return KSResult(count, d, float(scaled), bool(scaled < KS_CRITICAL), name)


_QUAD_TOL = 1e-8


def _bernoulli_float(m: int) -> float:
    # local recurrence in floats; cheap for m <= 10
    from math import comb

    B = [1.0]
    for k in range(1, m + 1):
        B.append(-sum(comb(k + 1, j) * B[j] for j in range(k)) / (k + 1))
    return B[m]


def quad_bernoulli_even(n: int) -> float:
    """B_{2n} from pi (-1)^{n+1} * integral_0^inf t^{2n} csch^2(pi t) dt.

    csch^2(pi t) is written as 4 e^{-2 pi t} / (1 - e^{-2 pi t})^2, which
    neither overflows for large t nor loses the t -> 0 limit.
    """
    if not 1 <= n <= 5:
        raise ValueError("n must satisfy 1 <= n <= 5")

    def f(t):
        if t == 0.0:
            return 1.0 / np.pi**2 if n == 1 else 0.0
        q = -np.expm1(-2 * np.pi * t)
        return 4.0 * t ** (2 * n) * np.exp(-2 * np.pi * t) / (q * q)

    val, err = integrate.quad(f, 0.0, np.inf, epsabs=1e-13, epsrel=1e-12, limit=200)
    result = (-1) ** (n + 1) * np.pi * val
    exact = _bernoulli_float(2 * n)
    if not abs(result - exact) < _QUAD_TOL or err > _QUAD_TOL:
        raise QuadratureNonConvergent(f"n={n}: got {result!r}, estimated error {err:.3g}")
    return float(result)
