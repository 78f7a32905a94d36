"""Generating functions built from their closed forms as truncated series.

Every builder takes the target order ``N`` explicitly, works internally at
whatever higher order its removable singularities consume, and returns a
series of order exactly ``N``.  Radicals use the branch with constant term 1;
divisions by ``2tz`` and the like go through exact shifts and exact
polynomial division so a mistranscribed formula raises
:class:`~narayana_cf.errors.NotDivisible` instead of producing garbage.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    ONE_POLY,
    POLY,
    RATIONAL,
    T,
    Series,
    series_compose,
    series_div,
    series_even_part,
    series_exact_div,
    series_map_t,
    series_sqrt,
    series_subst_z,
    z_poly,
)
from .errors import UnknownId

TWO_T = 2 * T
TWO_T2 = 2 * T * T


@dataclass(frozen=True)
class GammaSigns:
    sign_t: int = 1
    sign_z: int = 1

    def __post_init__(self):
        if self.sign_t not in (1, -1) or self.sign_z not in (1, -1):
            raise ValueError("signs must be +1 or -1")


def gamma_series(signs: GammaSigns, N: int) -> Series:
    """``gamma(+-t, +-z) = 1 + (1 +- t)(+-z)``."""
    slope = (ONE_POLY + T * signs.sign_t) * signs.sign_z
    return z_poly([ONE_POLY, slope], N)


def gammas(N: int) -> dict[str, Series]:
    """The four variants keyed ``"++"``, ``"-+"``, ``"+-"``, ``"--"`` (t-sign then z-sign)."""
    out = {}
    for st in (1, -1):
        for sz in (1, -1):
            key = ("+" if st > 0 else "-") + ("+" if sz > 0 else "-")
            out[key] = gamma_series(GammaSigns(st, sz), N)
    return out


def gamma4(N: int) -> Series:
    g = gammas(N)
    return g["++"] * g["--"] * g["+-"] * g["-+"]


# ----------------------------------------------------------------- Catalan


def gf_catalan(N: int) -> Series:
    """``(1 - sqrt(1 - 4z)) / (2z)``."""
    M = N + 1
    root = series_sqrt(z_poly([1, -4], M, RATIONAL))
    return (1 - root).shift_down(1) / 2


def gf_catalan_shift(N: int) -> Series:
    """``G(z) = (C(z) - 1) / z``, the generating function of ``C_{n+1}``."""
    return (gf_catalan(N + 1) - 1).shift_down(1)


# ---------------------------------------------------------------- Narayana


def gf_narayana(N: int) -> Series:
    """``(1 + (t-1)z - sqrt((1 + (t-1)z)^2 - 4tz)) / (2tz)``."""
    M = N + 1
    lin = z_poly([ONE_POLY, T - 1], M)
    disc = lin * lin - z_poly([0, 4 * T], M)
    numer = lin - series_sqrt(disc)
    return series_exact_div(numer.shift_down(1), TWO_T)


def gf_narayana_compose(N: int) -> Series:
    """``C(t, z) = C(tz / (1 + (t-1)z)^2) / (1 + (t-1)z)``."""
    lin = z_poly([ONE_POLY, T - 1], N)
    inner = series_div(z_poly([0, T], N), lin * lin)
    return series_div(series_compose(gf_catalan(N), inner), lin)


def gf_narayana_shift(N: int) -> Series:
    """``G(t, z) = (1 - (1+t)z - sqrt((1 - (1+t)z)^2 - 4tz^2)) / (2tz^2)``."""
    M = N + 2
    lin = z_poly([ONE_POLY, -(ONE_POLY + T)], M)
    disc = lin * lin - z_poly([0, 0, 4 * T], M)
    numer = lin - series_sqrt(disc)
    return series_exact_div(numer.shift_down(2), TWO_T)


def at_t2_z2(f_builder, N: int) -> Series:
    """``F(t^2, z^2)`` to order ``N`` for a Poly-domain builder ``F``."""
    f = f_builder((N + 1) // 2)
    return series_subst_z(series_map_t(f, "t^2"), "z^2").truncate(N)


def at_z2(f_builder, N: int) -> Series:
    f = f_builder((N + 1) // 2)
    return series_subst_z(f, "z^2").truncate(N)


# ------------------------------------------------------------------ q = -1


def gf_g(N: int) -> Series:
    """``g(t, z) = (1 - t z^2 G(t^2, z^2)) / (1 - (1+t)z)``."""
    G2 = at_t2_z2(gf_narayana_shift, N)
    numer = 1 - (G2 * T).shift_up(2).truncate(N)
    return series_div(numer, z_poly([ONE_POLY, -(ONE_POLY + T)], N))


def gf_c(N: int) -> Series:
    """Explicit radical form of ``c(t, z) = sum c_n(t) z^n`` written with plain linear factors."""
    M = N + 1
    one_m = ONE_POLY - T
    one_p = ONE_POLY + T
    top = z_poly([ONE_POLY, -one_m], M) * z_poly([ONE_POLY, one_p], M)
    bottom = z_poly([ONE_POLY, one_m], M) * z_poly([ONE_POLY, -one_p], M)
    root = series_sqrt(series_div(top, bottom))
    numer = z_poly([ONE_POLY, one_m], M) * (root - 1)
    return series_exact_div(numer.shift_down(1), TWO_T)


def gf_c_gamma(N: int) -> Series:
    """Same series written through the gamma factors."""
    M = N + 1
    g = gammas(M)
    root = series_sqrt(series_div(g["++"] * g["--"], g["+-"] * g["-+"]))
    numer = g["-+"] * (root - 1)
    return series_exact_div(numer.shift_down(1), TWO_T)


def gf_c_single_radical(N: int) -> Series:
    """``(sqrt(g++ g-- g-+ / g+-) - g-+) / (2tz)``."""
    M = N + 1
    g = gammas(M)
    root = series_sqrt(series_div(g["++"] * g["--"] * g["-+"], g["+-"]))
    return series_exact_div((root - g["-+"]).shift_down(1), TWO_T)


# ------------------------------------------------------------- odd part, W


def gf_narayana_t2z2_gamma(N: int) -> Series:
    """``C(t^2, z^2) = (1 - (1-t^2)z^2 - sqrt(gamma4)) / (2 t^2 z^2)``."""
    M = N + 2
    lin = z_poly([ONE_POLY, 0, -(ONE_POLY - T * T)], M)
    numer = lin - series_sqrt(gamma4(M))
    return series_exact_div(numer.shift_down(2), TWO_T2)


def gf_W(N: int) -> Series:
    """``1 / sqrt(1 - 2(t+1)z + (t-1)^2 z^2)``."""
    disc = z_poly([ONE_POLY, -2 * (T + 1), (T - 1) * (T - 1)], N)
    return series_div(Series.constant(1, N, POLY), series_sqrt(disc))


def gf_W_t2z2_gamma(N: int) -> Series:
    """``W(t^2, z^2) = 1 / sqrt(gamma4)``."""
    return series_div(Series.constant(1, N, POLY), series_sqrt(gamma4(N)))


def gf_w(N: int) -> Series:
    """``w(t, z) = gamma(t, z) W(t^2, z^2)``."""
    return gamma_series(GammaSigns(1, 1), N) * at_t2_z2(gf_W, N)


def gf_w_single_radical(N: int) -> Series:
    """``sqrt(g++ / (g-+ g+- g--))``."""
    g = gammas(N)
    return series_sqrt(series_div(g["++"], g["-+"] * g["+-"] * g["--"]))


def gf_h_z2(N: int) -> Series:
    """``h(t, z^2) = (sqrt(g-+ g-- / (g++ g+-)) - 1) / (2 t z^2)`` as a series in ``z``."""
    M = N + 2
    g = gammas(M)
    root = series_sqrt(series_div(g["-+"] * g["--"], g["++"] * g["+-"]))
    return series_exact_div((root - 1).shift_down(2), TWO_T)


def gf_h_z2_expanded(N: int) -> Series:
    """``h(t, z^2) = (sqrt((1 - (1-t)^2 z^2) / (1 - (1+t)^2 z^2)) - 1) / (2 t z^2)``."""
    M = N + 2
    top = z_poly([ONE_POLY, 0, -(ONE_POLY - T) * (ONE_POLY - T)], M)
    bottom = z_poly([ONE_POLY, 0, -(ONE_POLY + T) * (ONE_POLY + T)], M)
    root = series_sqrt(series_div(top, bottom))
    return series_exact_div((root - 1).shift_down(2), TWO_T)


def gf_h(N: int) -> Series:
    """``h(t, z) = sum c_{2n+1}(t) z^n``."""
    return series_even_part(gf_h_z2(2 * N + 1)).truncate(N)


GF_BUILDERS = {
    "C": gf_catalan,
    "G": gf_catalan_shift,
    "C_t": gf_narayana,
    "G_t": gf_narayana_shift,
    "g": gf_g,
    "c": gf_c,
    "h": gf_h,
    "W_t": gf_W,
    "w": gf_w,
    "gamma4": gamma4,
}
for _st, _sz in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
    GF_BUILDERS[f"gamma({'+' if _st > 0 else '-'}t,{'+' if _sz > 0 else '-'}z)"] = (
        lambda N, _g=GammaSigns(_st, _sz): gamma_series(_g, N)
    )
GF_ALIASES = {"W": "W_t", "gamma": "gamma(+t,+z)"}


def build(gf_id: str, N: int) -> Series:
    gf_id = GF_ALIASES.get(gf_id, gf_id)
    try:
        builder = GF_BUILDERS[gf_id]
    except KeyError:
        raise UnknownId(gf_id) from None
    return builder(N)


def gamma4_identities(N: int) -> dict[str, bool]:
    """Expand the gamma-product identities as series in ``z`` and compare both sides."""
    g = gammas(N)
    prod = g["++"] * g["--"] * g["+-"] * g["-+"]
    t2 = T * T
    a = z_poly([ONE_POLY, 0, -(ONE_POLY + t2)], N)
    b = z_poly([ONE_POLY, 0, -(ONE_POLY - t2)], N)
    form1 = a * a - z_poly([0, 0, 0, 0, 4 * t2], N)
    form2 = b * b - z_poly([0, 0, 4 * t2], N)
    pair_sum = g["++"] * g["--"] + g["-+"] * g["+-"]
    return {
        "product = (1-(1+t^2)z^2)^2 - 4t^2z^4": prod == form1,
        "product = (1-(1-t^2)z^2)^2 - 4t^2z^2": prod == form2,
        "pair sum = 2(1-(1-t^2)z^2)": pair_sum == b * 2,
        "radical form of C(t^2, z^2)": gf_narayana_t2z2_gamma(N) == at_t2_z2(gf_narayana, N),
    }
