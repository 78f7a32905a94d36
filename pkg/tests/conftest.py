from fractions import Fraction

from hypothesis import strategies as st

from narayana_cf.algebra import Poly, Series

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def polys(draw, max_degree=8, coeffs=small_ints):
    return Poly(draw(st.lists(coeffs, max_size=max_degree + 1)))


@st.composite
def nonzero_polys(draw, max_degree=6):
    p = draw(polys(max_degree))
    return p if not p.is_zero() else Poly([draw(st.integers(1, 5))])


@st.composite
def series_one(draw, domain="Rational", order=8):
    """Series with constant term 1."""
    if domain == "Rational":
        tail = draw(st.lists(small_rationals, min_size=order, max_size=order))
    else:
        tail = draw(st.lists(polys(3), min_size=order, max_size=order))
    return Series([1, *tail], order, domain)


def gen_binom(a: Fraction, n: int) -> Fraction:
    """Generalised binomial coefficient binom(a, n)."""
    out = Fraction(1)
    for i in range(n):
        out = out * (a - i) / (i + 1)
    return out
