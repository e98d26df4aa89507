import pytest

from umbral import I, ExactScalar, MultiPoly, TruncSeries
from umbral.errors import CompositionNonNilpotent, DivisionByNonUnit
from umbral.poly import PolyAccumulator, series_compose, series_exp
from umbral.series import elementary_series, exp_series, series_arith

x, y, s = MultiPoly.var("x"), MultiPoly.var("y"), MultiPoly.var("s")


def test_ring_examples():
    assert (x + 1) * (x - 1) == x**2 - 1
    assert str(x**2 - 1) == "x^2 - 1"
    assert (I * s) ** 2 == -(s**2)
    z = MultiPoly.zero() * (x + y)
    assert z.is_zero() and len(z) == 0


def test_canonical_form_drops_zeros():
    p = (x + y) - y
    assert p == x and p.variables == ("x",)
    assert MultiPoly({(("x", 0),): 3}) == MultiPoly.const(3)


def test_substitution_and_calculus():
    p = x**3 + 2 * x * y
    assert p.diff("x") == 3 * x**2 + 2 * y
    assert p.antiderivative("y").diff("y") == p
    assert p.subs({"x": y, "y": x}) == y**3 + 2 * x * y
    assert p.evaluate({"x": 2, "y": "1/2"}) == 10


def test_truncated_product_and_exp():
    w = {"x": 1, "y": 1}
    assert ((1 + x) * (1 + y)).truncate(1, w) == 1 + x + y
    e = series_exp(x + y, 3, w)
    assert e == series_exp(x, 3, w).mul_trunc(series_exp(y, 3, w), 3, w)
    with pytest.raises(CompositionNonNilpotent):
        series_exp(1 + x, 3, w)
    geo = series_compose([1] * 5, x, 4, {"x": 1})
    assert geo.mul_trunc(1 - x, 4, {"x": 1}) == 1


def test_accumulator():
    acc = PolyAccumulator()
    acc.add(x, 2)
    acc.add_monomial({"y": 2}, ExactScalar(0, 1))
    acc.add(-2 * x)
    assert acc.result() == I * y**2


def test_poly_json_round_trip():
    p = (x - I * y) ** 3 / 7
    assert MultiPoly.from_json(p.to_json()) == p


def test_exp_series_n4():
    assert exp_series(4) == TruncSeries([1, 1, "1/2", "1/6", "1/24"])


def test_division_recovers_bernoulli_egf():
    t = TruncSeries([0, 1], 5)
    q = t / (exp_series(5) - 1)
    assert q == TruncSeries([1, "-1/2", "1/12", 0, "-1/720"], 4)


def test_reciprocal_cosh_half():
    got = elementary_series("sech_half", 4)
    assert got == TruncSeries([1, 0, "-1/8", 0, "5/384"])
    assert elementary_series("sech_half", 2) == TruncSeries([1, 0, "-1/8"])


def test_elementary_examples():
    assert elementary_series("sinh_ratio", 4) == TruncSeries([1, 0, "-1/24", 0, "7/5760"])
    assert elementary_series("exp", 0) == TruncSeries([1])


def test_even_kernels_to_40():
    assert elementary_series("sinh_ratio", 40).is_even()
    assert elementary_series("sech_half", 40).is_even()


def test_series_errors():
    z = TruncSeries([0, 1, 2], 2)
    with pytest.raises(DivisionByNonUnit):
        exp_series(2) / TruncSeries([0], 2)
    with pytest.raises(DivisionByNonUnit):
        TruncSeries([1, 1], 2) / TruncSeries([0, 0, 1], 2)
    with pytest.raises(CompositionNonNilpotent):
        exp_series(2).compose(TruncSeries([1, 1], 2))
    assert series_arith(exp_series(2), z, "compose") == TruncSeries([1, 1, "5/2"])
    with pytest.raises(ValueError):
        exp_series(2) + exp_series(3)


def test_div_then_mul_recovers_dividend():
    a = TruncSeries([2, -1, 3, 0, 5])
    b = TruncSeries([1, 4, 0, -2, 1])
    assert (a / b) * b == a
    assert b.reciprocal() * b == TruncSeries([1], 4)
