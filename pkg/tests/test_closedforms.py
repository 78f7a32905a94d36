import pytest

from narayana_cf import closedforms as cf
from narayana_cf.algebra import ONE_POLY, T, Series, series_map_t, z_poly
from narayana_cf.errors import UnknownId
from narayana_cf.sequences import (
    c_neg1_closed,
    catalan,
    narayana,
    w_binomial_sq,
    w_neg1,
)

N = 24


def coeffs_match(series, f):
    return all(series[n] == f(n) for n in range(series.order + 1))


def test_catalan_gfs():
    assert coeffs_match(cf.gf_catalan(N), catalan)
    assert coeffs_match(cf.gf_catalan_shift(N), lambda n: catalan(n + 1))


def test_catalan_functional_equation():
    C = cf.gf_catalan(N)
    z = z_poly([0, 1], N, "Rational")
    assert z * C * C - C + 1 == Series.constant(0, N)


def test_narayana_gfs():
    assert coeffs_match(cf.gf_narayana(N), narayana)
    assert cf.gf_narayana_compose(N) == cf.gf_narayana(N)
    assert coeffs_match(cf.gf_narayana_shift(N), lambda n: narayana(n + 1))


def test_narayana_functional_equation():
    C = cf.gf_narayana(N)
    lin = z_poly([ONE_POLY, T - 1], N)
    tz = z_poly([0, T], N)
    assert tz * C * C - lin * C + 1 == Series.constant(0, N, "Poly")


def test_narayana_at_t_one_is_catalan():
    C1 = series_map_t(cf.gf_narayana(N), 1)
    assert all(C1[n] == catalan(n) for n in range(N + 1))


def test_q_neg1_gfs():
    assert coeffs_match(cf.gf_g(N), lambda n: c_neg1_closed(n + 1))
    assert coeffs_match(cf.gf_c(N), c_neg1_closed)
    assert cf.gf_c_gamma(N) == cf.gf_c(N)
    assert cf.gf_c_single_radical(N) == cf.gf_c(N)
    assert coeffs_match(cf.gf_h(N), lambda n: c_neg1_closed(2 * n + 1))
    assert cf.gf_h_z2(N) == cf.gf_h_z2_expanded(N)


def test_W_closed_form_gives_squared_binomials():
    W = cf.gf_W(N)
    assert coeffs_match(W, w_binomial_sq)
    assert W[2] == ONE_POLY + 4 * T + T * T
    assert coeffs_match(cf.gf_w(N), lambda n: w_neg1(n, squared=True))
    assert cf.gf_w_single_radical(N) == cf.gf_w(N)
    assert cf.gf_W_t2z2_gamma(N) == cf.at_t2_z2(cf.gf_W, N)


def test_gamma_identities():
    assert all(cf.gamma4_identities(N).values())
    g = cf.gammas(3)
    assert g["+-"][1] == -(ONE_POLY + T) and g["-+"][1] == ONE_POLY - T


def test_gamma_signs_validated():
    with pytest.raises(ValueError):
        cf.GammaSigns(2, 1)


@pytest.mark.parametrize("gf_id", sorted(cf.GF_BUILDERS) + sorted(cf.GF_ALIASES))
@pytest.mark.parametrize("order", [0, 1, 7])
def test_builders_return_requested_order(gf_id, order):
    assert cf.build(gf_id, order).order == order


def test_build_unknown():
    with pytest.raises(UnknownId):
        cf.build("nope", 3)
