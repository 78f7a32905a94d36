from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero_polys, polys
from narayana_cf.algebra import ONE_POLY, T, Poly, RatFunc, render
from narayana_cf.expr import ParseError, parse_poly, parse_value, parse_weight


def test_weights():
    w = parse_weight("(-1)^n*(1+t)")
    assert [w(k) for k in range(3)] == [ONE_POLY + T, -(ONE_POLY + T), ONE_POLY + T]
    w = parse_weight("(-1)^binom(n,2)")
    assert [w(k).constant_term() for k in range(6)] == [1, 1, -1, -1, 1, 1]
    assert parse_weight("-t")(7) == -T
    assert parse_weight("n + 1")(4) == Poly([5])


def test_polys():
    assert parse_poly("1 + 2*t + t^2") == Poly([1, 2, 1])
    assert parse_poly("-1/2*t + 3*t^3") == Poly([0, Fraction(-1, 2), 0, 3])
    assert parse_poly("(1+t)^3 - t") == Poly([1, 2, 3, 1])


def test_errors():
    for bad in ("1 +", "t $ 2", "(1+t", "t^-1", "1/0", "binom(t, 1)", "t t"):
        with pytest.raises(ParseError):
            parse_poly(bad)
    with pytest.raises(ParseError):
        parse_poly("n + 1")
    with pytest.raises(ParseError):
        parse_poly("1/t")


def test_ratfunc_value():
    v = parse_value("(1 + t)/(t)")
    assert v == RatFunc(ONE_POLY + T, T)
    assert parse_value("(t + t^2)/(t)") == ONE_POLY + T


@given(polys())
def test_render_round_trip(p):
    assert parse_value(render(p)) == p


@given(polys(4), nonzero_polys(3))
def test_render_round_trip_ratfunc(a, b):
    r = RatFunc(a, b)
    v = parse_value(render(r))
    assert v == (r.to_poly() if r.is_polynomial() else r)
