from fractions import Fraction

import pytest
from gmpy2 import mpq

from umbral import I, ONE, ZERO, ExactScalar
from umbral.exact import as_rational, format_rational


def test_lowest_terms_positive_denominator():
    q = as_rational(mpq(6, -4))
    assert (q.numerator, q.denominator) == (-3, 2)
    assert format_rational(mpq(10, 4)) == "5/2"
    assert format_rational(mpq(4, 2)) == "2"


def test_accepts_common_rational_inputs():
    assert as_rational(Fraction(1, 3)) == mpq(1, 3)
    assert as_rational("−1/6") == mpq(-1, 6)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_i_squared():
    assert I * I == -1
    assert I**4 == ONE
    assert I**-1 == -I


def test_arithmetic_and_division():
    a = ExactScalar("1/2", 3)
    assert str(a) == "1/2 + 3*i"
    assert a * a.conjugate() == a.norm()
    assert a / a == ONE
    with pytest.raises(ZeroDivisionError):
        a / ZERO


def test_json_round_trip():
    for v in (ExactScalar("-691/2730"), ExactScalar(1, -2), ZERO):
        assert ExactScalar.from_json(v.to_json()) == v
    assert ExactScalar("-691/2730").to_json() == "-691/2730"
    assert ExactScalar(0, 1).to_json() == {"re": "0", "im": "1"}


def test_immutable_and_hashable():
    a = ExactScalar(2)
    with pytest.raises(AttributeError):
        a.re = 3
    assert hash(a) == hash(ExactScalar(2))
    assert len({a, ExactScalar(2), ExactScalar(2, 1)}) == 2
