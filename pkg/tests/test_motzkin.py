from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narayana_cf.algebra import ONE_POLY, T, Poly
from narayana_cf.jfraction import REGISTRY
from narayana_cf.motzkin import (
    CFSpec,
    alternating_spec,
    brute_weight,
    brute_weights,
    enumerate_paths,
    lemma_weight,
    path_weight,
    triangle,
)

STEP = {"U": 1, "H": 0, "D": -1}


def product_oracle(n, k, cf):
    """Sum over all 3^n step words, keeping the non-negative ones."""
    total = 0
    for word in product("UHD", repeat=n):
        h, ok = 0, True
        for c in word:
            h += STEP[c]
            if h < 0:
                ok = False
                break
        if ok and h == k:
            total = total + path_weight("".join(word), cf)
    return total


def test_motzkin_numbers():
    cf = CFSpec.constant(1, 1)
    assert [triangle(cf, 6)(n, 0) for n in range(7)] == [1, 1, 2, 4, 9, 21, 51]
    assert len(enumerate_paths(4, 0)) == 9
    assert len(enumerate_paths(3, 1)) == 5


def test_enumerate_paths_order():
    assert enumerate_paths(2, 0) == ["UD", "HH"]
    assert enumerate_paths(0, 0) == [""]
    assert enumerate_paths(3, 4) == []


def test_triangle_boundaries():
    tri = triangle(CFSpec.constant(2, 3), 5)
    assert tri(0, 0) == 1
    assert tri(3, 4) == 0 and tri(3, -1) == 0
    assert all(tri(n, n) == 1 for n in range(6))
    with pytest.raises(ValueError):
        triangle(CFSpec.constant(1, 1), -1)


def test_dyck_case_gives_ballot_numbers():
    tri = triangle(CFSpec.constant(0, 1), 8)
    assert [tri(2 * n, 0) for n in range(5)] == [1, 1, 2, 5, 14]
    assert tri(7, 1) == 14


@pytest.mark.parametrize("cf_id", sorted(REGISTRY))
def test_triangle_matches_brute_force(cf_id):
    cf = REGISTRY[cf_id].cf
    n_max = 7
    tri = triangle(cf, n_max)
    for n in range(n_max + 1):
        bw = brute_weights(n, cf)
        for k in range(n + 1):
            assert tri(n, k) == bw[k] == brute_weight(n, k, cf)


def test_product_oracle_agrees():
    cf = CFSpec(lambda k: ONE_POLY + k * T, lambda k: T ** (k + 1) - 1, "Poly")
    tri = triangle(cf, 6)
    for n in range(7):
        for k in range(n + 1):
            assert tri(n, k) == product_oracle(n, k, cf)


@given(st.lists(st.integers(-3, 3), min_size=7, max_size=7),
       st.lists(st.integers(-3, 3), min_size=7, max_size=7))
@settings(max_examples=40, deadline=None)
def test_triangle_property(s, t):
    cf = CFSpec(lambda k: s[k], lambda k: t[k])
    tri = triangle(cf, 6)
    for n in range(7):
        for k in range(n + 1):
            assert tri(n, k) == product_oracle(n, k, cf)


def test_brute_limit():
    with pytest.raises(ValueError):
        brute_weights(17, CFSpec.constant(1, 1))


def test_lemma_examples():
    assert lemma_weight(1, 0, 2, 3) == 7
    assert lemma_weight(2, 1, 5, 7) == 5 ** 5 + 2 * 7 * 5 ** 3 + 2 * 49 * 5
    assert lemma_weight(0, 1, 4, 9) == 4
    with pytest.raises(ValueError):
        lemma_weight(1, 2, 1, 1)


@pytest.mark.parametrize("s,t", [(2, 3), (5, 7), (-3, 2), (Fraction(1, 2), -1)])
def test_lemma_against_paths(s, t):
    cf = alternating_spec(s, t)
    for n in range(5):
        for delta in (0, 1):
            length = 2 * n + delta
            assert lemma_weight(n, delta, s, t) == brute_weight(length, 0, cf)


def test_lemma_symbolic():
    s, t = ONE_POLY + T, -T
    cf = alternating_spec(s, t, "Poly")
    tri = triangle(cf, 9)
    for n in range(5):
        for delta in (0, 1):
            if 2 * n + delta <= 9:
                assert lemma_weight(n, delta, s, t) == tri(2 * n + delta, 0)
    assert isinstance(lemma_weight(2, 0, s, t), Poly)
