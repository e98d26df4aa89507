import pytest

from frozen import BERNOULLI, BERNOULLI_POLY, CHEN_K, EULER, EULER_POLY, HERMITE, POWER_SUMS, ZEILBERGER
from helpers import upoly
from umbral import (
    MultiPoly, bernoulli_number, bernoulli_poly, carlitz_hermite, chen_k, euler_number, euler_poly,
    hermite, power_sum, zeilberger_hermite,
)
from umbral.families import integrate_poly

PATHS = ("oracle", "umbral")
x, z = MultiPoly.var("x"), MultiPoly.var("z")


@pytest.mark.parametrize("path", PATHS)
def test_frozen_numbers(path):
    for n, v in BERNOULLI.items():
        assert bernoulli_number(n, path) == v, n
    for n, v in EULER.items():
        assert euler_number(n, path) == v, n


@pytest.mark.parametrize("path", PATHS)
def test_frozen_polynomials(path):
    for n, c in BERNOULLI_POLY.items():
        assert bernoulli_poly(n, path) == upoly(c, "x")
    for n, c in EULER_POLY.items():
        assert euler_poly(n, path) == upoly(c, "x")
    for n, c in HERMITE.items():
        assert hermite(n, path) == upoly(c, "u")
    for (m, n), c in ZEILBERGER.items():
        assert zeilberger_hermite(m, n, path) == upoly(c, "w")
        assert zeilberger_hermite(n, m, path) == upoly(c, "w")


@pytest.mark.parametrize("path", PATHS)
def test_carlitz_examples(path):
    u, v = MultiPoly.var("u"), MultiPoly.var("v")
    assert carlitz_hermite(1, 1, path) == u * v + 1
    assert carlitz_hermite(4, 0, path) == u**4
    assert carlitz_hermite(2, 2, path) == u**2 * v**2 + 4 * u * v + 2
    assert carlitz_hermite(1, 3, path) == carlitz_hermite(3, 1, path, ("v", "u"))
    assert zeilberger_hermite(0, 5, path) == 1


def test_bernoulli_at_zero():
    for n in range(31):
        assert bernoulli_poly(n).subs({"x": 0}) == bernoulli_number(n)


def test_euler_number_from_polynomial_at_half():
    for n in range(21):
        assert euler_poly(n).subs({"x": "1/2"}) * 2**n == euler_number(n)


def test_power_sums_all_paths():
    for (k, n), v in POWER_SUMS.items():
        for p in ("direct", "bernoulli_formula", "integral"):
            assert power_sum(k, n, p) == v, (k, n, p)


def test_chen_k():
    for n, v in CHEN_K.items():
        assert chen_k(n) == v


def test_integrate_poly_examples():
    assert integrate_poly(bernoulli_poly(1, var="z"), "z", 0, 1) == 0
    assert integrate_poly(bernoulli_poly(2, var="z"), "z", x, x + 1) == x**2
    assert integrate_poly(z**3 + 1, "z", 0, 0).is_zero()


def test_bad_arguments():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        hermite(2, "sympy")
    with pytest.raises(ValueError):
        power_sum(2, 3, "guess")
