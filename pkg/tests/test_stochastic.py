import numpy as np
import pytest

from umbral.errors import MomentTooHigh, QuadratureNonConvergent
from umbral.stochastic import (
    SamplerSpec, ks_check, mc_moment, quad_bernoulli_even, sample,
)

# seeds screened once against the 5-standard-error gates
SEED_L, SEED_L0 = 42, 7


def _gate(values, exact):
    m = values.mean()
    se = values.std(ddof=1) / np.sqrt(len(values))
    return abs(m - exact) <= 5 * se


def test_streams_are_reproducible():
    spec = SamplerSpec("LogisticL", "log_exp_ratio", 3)
    a, b = sample(spec, 1000), sample(spec, 1000)
    assert a.tobytes() == b.tobytes()
    assert sample(SamplerSpec("LogisticL", "log_exp_ratio", 4), 1000).tobytes() != a.tobytes()


def test_logistic_sample_moments():
    s = sample(SamplerSpec("LogisticL", "log_uniform_ratio", SEED_L), 10**6)
    assert _gate(s, 0.0)
    assert _gate(s**2, 1 / 12)


def test_sech_sample_second_moment():
    s = sample(SamplerSpec("SechL0", "log_abs_cauchy", SEED_L0), 10**6)
    assert _gate(s**2, 1 / 4)


def test_mc_moment_examples():
    L = SamplerSpec("LogisticL", seed=SEED_L)
    assert mc_moment(L, 2, -0.5).within(1 / 6)
    assert mc_moment(L, 3, -0.5).within(0.0)
    e2 = mc_moment(SamplerSpec("SechL0", seed=SEED_L0), 2)
    assert abs(4 * e2.estimate.real + 1) <= 5 * 4 * e2.std_error


def test_mc_moment_guards():
    L = SamplerSpec("LogisticL")
    with pytest.raises(MomentTooHigh):
        mc_moment(L, 9)
    with pytest.raises(ValueError):
        mc_moment(L, 2, count=1)
    with pytest.raises(ValueError):
        SamplerSpec("LogisticL", "log_abs_cauchy")


def test_ks_requires_enough_draws():
    with pytest.raises(ValueError):
        ks_check(SamplerSpec("LogisticL"), 100)


def test_laplace_needs_product_not_ratio():
    good = ks_check(SamplerSpec("LaplaceViaGauss", "gauss_times_sqrt_exp", SEED_L))
    literal = ks_check(SamplerSpec("LaplaceViaGauss", "gauss_over_sqrt_exp", SEED_L))
    assert good.passed and not literal.passed


@pytest.mark.parametrize("n,exact", [(1, 1 / 6), (2, -1 / 30), (3, 1 / 42)])
def test_quadrature(n, exact):
    assert abs(quad_bernoulli_even(n) - exact) < 1e-8


def test_quadrature_domain():
    with pytest.raises(ValueError):
        quad_bernoulli_even(0)
    assert issubclass(QuadratureNonConvergent, RuntimeError)
