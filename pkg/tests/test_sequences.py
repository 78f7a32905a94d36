from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from narayana_cf.algebra import ONE_POLY, T, Poly, poly_exact_div, poly_subst
from narayana_cf.errors import UnknownId
from narayana_cf.sequences import (
    SEQUENCES,
    c_neg1_closed,
    c_neg1_rec,
    c_odd,
    catalan,
    catalan_neg1,
    coker_sum,
    gaussian_binomial,
    narayana,
    sequence,
    touchard_sum,
    values,
    w_binomial,
    w_binomial_sq,
    w_neg1,
    w_q_neg1,
)

Q = T  # polynomials in q reuse the Poly type


def q_int(k):
    return Poly([1] * k)


def q_narayana_at_neg1(n):
    """C_n(t; q) built from q-binomials in q, divided exactly, then q -> -1."""
    if n == 0:
        return ONE_POLY
    coeffs = []
    for k in range(n):
        num = Q ** (k * k + k) * gaussian_binomial(n, k) * gaussian_binomial(n - 1, k)
        coeffs.append(poly_exact_div(num, q_int(k + 1))(-1))
    return Poly(coeffs)


def dyck_paths(n):
    for steps in product((1, -1), repeat=2 * n):
        h = 0
        for s in steps:
            h += s
            if h < 0:
                break
        else:
            if h == 0:
                yield steps


def peaks(steps):
    return sum(1 for a, b in zip(steps, steps[1:]) if a == 1 and b == -1)


def test_catalan_and_neg1_values():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [catalan_neg1(n) for n in range(7)] == [1, 1, 2, 3, 6, 10, 20]


def test_catalan_counts_dyck_paths():
    for n in range(7):
        assert catalan(n) == sum(1 for _ in dyck_paths(n))


def test_narayana_counts_peaks():
    # coefficient of t^k counts Dyck paths with k+1 peaks
    for n in range(1, 7):
        counts = [0] * n
        for p in dyck_paths(n):
            counts[peaks(p) - 1] += 1
        assert narayana(n) == Poly(counts)
    assert narayana(0) == ONE_POLY


def test_narayana_examples():
    assert narayana(3) == Poly([1, 3, 1])
    assert narayana(4) == Poly([1, 6, 6, 1])
    assert all(narayana(n)(1) == catalan(n) for n in range(15))


def test_narayana_at_minus_one():
    for n in range(1, 20):
        assert narayana(n)(-1) == (0 if n % 2 == 0 else (-1) ** (n // 2) * catalan((n - 1) // 2))


def test_c_neg1_first_terms():
    expected = [[1], [1], [1, 1], [1, 1, 1], [1, 2, 2, 1], [1, 2, 4, 2, 1]]
    assert [c_neg1_closed(n) for n in range(6)] == [Poly(e) for e in expected]


@pytest.mark.parametrize("n", range(0, 13))
def test_c_neg1_matches_q_definition(n):
    assert c_neg1_closed(n) == q_narayana_at_neg1(n)


def test_c_neg1_dual_routes():
    for n in range(41):
        assert c_neg1_closed(n) == c_neg1_rec(n)


def test_c_neg1_at_one_is_q_catalan_at_minus_one():
    assert all(c_neg1_closed(n)(1) == catalan_neg1(n) for n in range(25))


def test_c_neg1_palindromic():
    assert all(c_neg1_closed(n).is_palindromic() for n in range(1, 25))


def test_gaussian_binomial():
    assert gaussian_binomial(4, 2) == Poly([1, 1, 2, 1, 1])
    for n in range(9):
        for k in range(n + 1):
            assert gaussian_binomial(n, k)(1) == comb(n, k)


def test_w_variants():
    assert w_binomial(3) == Poly([1, 3, 3, 1])
    assert w_binomial_sq(3) == Poly([1, 9, 9, 1])
    assert w_neg1(2) == Poly([1, 0, 1])
    assert w_neg1(3) == Poly([1, 1, 1, 1])
    assert w_neg1(4, squared=True) == Poly([1, 0, 4, 0, 1])
    for n in range(12):
        assert w_q_neg1(n) == w_neg1(n)
        assert w_q_neg1(n, squared=True) == w_neg1(n, squared=True)


def test_c_odd_formula_readings():
    # only the squared binomials reproduce c_{2n+1}
    assert c_odd(2) != c_neg1_closed(5)
    assert all(c_odd(n, squared=True) == c_neg1_closed(2 * n + 1) for n in range(20))
    assert c_odd(1) == c_neg1_closed(3)


def test_classical_sums():
    for n in range(20):
        assert touchard_sum(n) == catalan(n + 1)
        assert coker_sum(n) == narayana(n + 1)


def test_registry_lookup():
    assert values("catalan", 4) == [1, 1, 2, 5, 14]
    assert sequence("c_neg1") is c_neg1_closed
    with pytest.raises(UnknownId):
        sequence("fibonacci")
    assert {"catalan", "catalan_neg1", "narayana", "c_neg1", "w_binomial", "w_neg1"} <= set(SEQUENCES)


@given(st.integers(0, 30))
def test_c_neg1_recursion_property(n):
    c = c_neg1_closed
    if n >= 1:
        assert c(2 * n) == (ONE_POLY + T) * c(2 * n - 1)
    assert c(2 * n + 1) == (ONE_POLY + T) * c(2 * n) - T * poly_subst(narayana(n), "t^2")
