"""Registry of machine-checkable identities.

Each check is a pure function of its order ``n`` and returns a
:class:`CheckResult`.  Series identities are compared coefficient-wise up to
``z^n``; sequence identities for indices ``0..n``; continued fractions are
expanded to ``n`` moments and extracted to depth ``n // 2``.

Two statuses besides pass/fail exist for readings that are ambiguous as
printed: ``flagged`` checks evaluate every candidate reading and say which
one holds.  They fail only if no reading holds.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import closedforms as cf
from . import sequences as seq
from .algebra import (
    ONE_POLY,
    POLY,
    RATIONAL,
    T,
    Series,
    render,
    series_div,
    series_map_t,
    series_subst_z,
    z_poly,
)
from .errors import UnknownId
from .jfraction import REGISTRY, expand, extract, hankel, interleave_zeros, moments_of
from .motzkin import alternating_spec, brute_weight, brute_weights, lemma_weight, triangle

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    n_max: int
    witness: str | None = None
    note: str = ""
    elapsed: float = field(default=0.0, compare=False)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "n": self.n_max,
            "witness": self.witness,
            "note": self.note,
            "elapsed": round(self.elapsed, 4),
        }


@dataclass(frozen=True)
class Outcome:
    status: str
    witness: str | None = None
    note: str = ""


@dataclass(frozen=True)
class Check:
    id: str
    location: str
    default_n: int
    fn: Callable[[int], Outcome]
    max_n: int | None = None


CHECKS: dict[str, Check] = {}


def check(check_id: str, location: str, default_n: int = 30, max_n: int | None = None):
    def register(fn):
        if check_id in CHECKS:
            raise ValueError(f"duplicate check id {check_id}")
        CHECKS[check_id] = Check(check_id, location, default_n, fn, max_n)
        return fn

    return register


# --------------------------------------------------------------- comparison


def _series_witness(label: str, lhs: Series, rhs: Series) -> str | None:
    i = lhs.first_mismatch(rhs)
    if i is None:
        return None
    return f"{label}: z^{i} coefficient {render(lhs[i])} != {render(rhs[i])}"


def _seq_witness(label: str, lhs: Callable, rhs: Callable, indices) -> str | None:
    for i in indices:
        a, b = lhs(i), rhs(i)
        if a != b:
            return f"{label}: index {i}: {render(a)} != {render(b)}"
    return None


def _coeff_witness(label: str, series: Series, f: Callable) -> str | None:
    return _seq_witness(label, lambda i: series[i], f, range(series.order + 1))


def verdict(*witnesses: str | None, note: str = "") -> Outcome:
    for w in witnesses:
        if w is not None:
            return Outcome(FAIL, w, note)
    return Outcome(PASS, None, note)


def _one(N: int) -> Series:
    return Series.constant(1, N, POLY)


def _neg_t(f: Series) -> Series:
    return series_map_t(f, "-t")


def _neg_z(f: Series) -> Series:
    return series_subst_z(f, "-z")


def _mul_z(f: Series, k: int, N: int) -> Series:
    return f.shift_up(k).truncate(N)


# ----------------------------------------------------------------- Catalan


@check("eq5", "C(z) closed form and C = 1 + zC^2")
def _eq5(n):
    C = cf.gf_catalan(n)
    return verdict(
        _coeff_witness("C(z) vs Catalan numbers", C, seq.catalan),
        _series_witness("C = 1 + z C^2", C, 1 + _mul_z(C * C, 1, n)),
    )


@check("eq6", "C(z^2) as a continued fraction")
def _eq6(n):
    C2 = cf.at_z2(cf.gf_catalan, n)
    rhs = series_div(Series.constant(1, n), 1 - _mul_z(C2, 2, n))
    return verdict(
        _coeff_witness("C(z^2) vs interleaved Catalan", C2, interleave_zeros(seq.catalan)),
        _series_witness("C(z^2) = 1/(1 - z^2 C(z^2))", C2, rhs),
    )


@check("eq11", "Touchard's identity", default_n=30)
def _eq11(n):
    return verdict(_seq_witness("C_{n+1} = Touchard sum", lambda k: seq.catalan(k + 1), seq.touchard_sum, range(n + 1)))


@check("eq12", "G(z) = C(z)^2 and its functional equation")
def _eq12(n):
    G = cf.gf_catalan_shift(n)
    C = cf.gf_catalan(n)
    return verdict(
        _coeff_witness("G(z) vs C_{n+1}", G, lambda k: seq.catalan(k + 1)),
        _series_witness("G = C^2", G, C * C),
        _series_witness("G (1 - 2z - z^2 G) = 1", G * (1 - z_poly([0, 2], n, RATIONAL) - _mul_z(G, 2, n)), Series.constant(1, n)),
    )


@check("eq14", "C = 1/(1 - zC) = 1/(1 - z - z^2 G)")
def _eq14(n):
    C = cf.gf_catalan(n)
    G = cf.gf_catalan_shift(n)
    rhs = series_div(Series.constant(1, n), 1 - z_poly([0, 1], n, RATIONAL) - _mul_z(G, 2, n))
    return verdict(
        _series_witness("C = 1/(1 - zC)", C, series_div(Series.constant(1, n), 1 - _mul_z(C, 1, n))),
        _series_witness("C = 1/(1 - z - z^2 G)", C, rhs),
    )


# ---------------------------------------------------------------- Narayana


@check("eq15-vs-17", "Narayana sum vs closed form C(t,z)")
def _eq15_17(n):
    return verdict(_coeff_witness("closed form C(t,z) vs Narayana sum", cf.gf_narayana(n), seq.narayana),
                   _seq_witness("C_n(1) = C_n", lambda k: seq.narayana(k)(1), seq.catalan, range(n + 1)))


@check("eq18", "C(t,z) by composition with C(z)")
def _eq18(n):
    return verdict(_series_witness("C(t,z) via composition", cf.gf_narayana_compose(n), cf.gf_narayana(n)))


@check("eq19", "functional equation of C(t,z)")
def _eq19(n):
    C = cf.gf_narayana(n)
    rhs = 1 + _mul_z(C * (ONE_POLY - T), 1, n) + _mul_z(C * C * T, 1, n)
    return verdict(_series_witness("C = 1 + (1-t)zC + tzC^2", C, rhs))


@check("eq21", "C(t^2,z^2) from (1 - tzC)^2")
def _eq21(n):
    C2 = cf.at_t2_z2(cf.gf_narayana, n)
    num = 1 - _mul_z(C2 * T, 1, n)
    den = z_poly([ONE_POLY, -T], n) ** 2 - z_poly([0, 0, 1], n, POLY)
    return verdict(_series_witness("(1 - tzC(t^2,z^2))^2 / ((1-tz)^2 - z^2) = C(t^2,z^2)", series_div(num * num, den), C2))


@check("eq24", "Coker's identity", default_n=30)
def _eq24(n):
    return verdict(_seq_witness("C_{n+1}(t) = Coker sum", lambda k: seq.narayana(k + 1), seq.coker_sum, range(n + 1)))


@check("eq25", "G(t,z) closed form and functional equation")
def _eq25(n):
    G = cf.gf_narayana_shift(n)
    C = cf.gf_narayana(n + 1)
    rhs = 1 + _mul_z(G * (ONE_POLY + T), 1, n) + _mul_z(G * G * T, 2, n)
    return verdict(
        _coeff_witness("G(t,z) vs C_{n+1}(t)", G, lambda k: seq.narayana(k + 1)),
        _series_witness("G = (C - 1)/z", G, (C - 1).shift_down(1)),
        _series_witness("G = 1 + (1+t)zG + tz^2G^2", G, rhs),
    )


@check("eq28", "G(t^2,z^2) from (1 - tz^2 G)^2")
def _eq28(n):
    G2 = cf.at_t2_z2(cf.gf_narayana_shift, n)
    num = 1 - _mul_z(G2 * T, 2, n)
    den = 1 - z_poly([0, 0, (ONE_POLY + T) ** 2], n)
    return verdict(_series_witness("(1 - tz^2G(t^2,z^2))^2 / (1 - (1+t)^2 z^2) = G(t^2,z^2)", series_div(num * num, den), G2))


# --------------------------------------------------------- continued fractions


def _cf_check(cf_id: str, n: int) -> Outcome:
    entry = REGISTRY[cf_id]
    moments = entry.moment_list(n)
    expanded = expand(entry.cf, n)
    w = _seq_witness(f"expand({cf_id}) vs {entry.moment_desc}", lambda k: expanded[k], lambda k: moments[k], range(n + 1))
    if w:
        return verdict(w)
    depth = n // 2
    ex = extract(moments, depth)
    if not ex.is_polynomial():
        return verdict(f"extract({cf_id}) produced non-polynomial coefficients")
    s, t = ex.as_polys()
    return verdict(
        _seq_witness(f"extracted s_k of {cf_id}", lambda k: s[k], entry.cf.s_at, range(len(s))),
        _seq_witness(f"extracted t_k of {cf_id}", lambda k: t[k], entry.cf.t_at, range(len(t))),
        note=f"moments to n={n}; extracted depth {depth}, all coefficients polynomial",
    )


for _id, _loc in (
    ("ex1", "interleaved Catalan: s_k = 0, t_k = 1"),
    ("ex2", "shifted Catalan: s_k = 2, t_k = 1"),
    ("ex3", "Catalan: s_0 = 1, s_k = 2, t_k = 1"),
    ("ex4", "interleaved Narayana: s_k = 0, t_k = 1, t, 1, t, ..."),
    ("ex5", "shifted Narayana: s_k = 1+t, t_k = t"),
    ("ex6", "Narayana: s_0 = 1, s_k = 1+t, t_k = t"),
    ("thm1", "c_{n+1}(t): s_k = (-1)^k (1+t), t_k = -t"),
    ("thm2", "c_n(t): s_0 = 1, s_k = (-1)^k (1-t), t_k = t"),
    ("thm3", "interleaved c_n(t): s_k = 0, alternating-sign t_k"),
):
    _reg = "example" + _id[2:] if _id.startswith("ex") else _id
    check(_id, _loc, default_n=20)(lambda n, _r=_reg: _cf_check(_r, n))


@check("eq47", "interleaved C_n(-1): t_k = (-1)^binom(k,2)", default_n=20)
def _eq47(n):
    out = _cf_check("eq47", n)
    if out.status != PASS:
        return out
    thm3_at_1 = [m(1) for m in expand(REGISTRY["thm3"].cf, n)]
    return verdict(
        _seq_witness("C_n(-1) moments vs thm3 at t=1", lambda k: expand(REGISTRY["eq47"].cf, n)[k], lambda k: thm3_at_1[k], range(n + 1)),
        note=out.note,
    )


@check("thm4", "c_{2n+1}(t): s_0 = 1+t+t^2, s_k = 1+t^2, t_k = t^2", default_n=20)
def _thm4(n):
    out = _cf_check("thm4", n)
    if out.status != PASS:
        return out
    h = cf.gf_h(n)
    G_t2 = series_map_t(cf.gf_narayana_shift(n), "t^2")
    rhs = 1 - z_poly([0, ONE_POLY + T + T * T], n) - _mul_z(G_t2 * (T * T), 2, n)
    return verdict(_series_witness("1/h(t,z) = 1 - (1+t+t^2)z - t^2 z^2 G(t^2,z)", series_div(_one(n), h), rhs), note=out.note)


@check("lemma", "alternating s_k path weights", default_n=10)
def _lemma(n):
    pairs = [(2, 3), (5, 7), (-3, 2)]
    for s, t in pairs:
        moments = expand(alternating_spec(s, t), 2 * n + 1)
        for k in range(n + 1):
            for delta in (0, 1):
                got = lemma_weight(k, delta, s, t)
                if got != moments[2 * k + delta]:
                    return verdict(f"s={s}, t={t}, n={k}, delta={delta}: {got} != {moments[2 * k + delta]}")
    sym = expand(alternating_spec(ONE_POLY + T, -T, POLY), 2 * n + 1)
    return verdict(_seq_witness("symbolic s=1+t, t=-t", lambda m: lemma_weight(m // 2, m % 2, ONE_POLY + T, -T), lambda m: sym[m], range(2 * n + 2)))


@check("hankel-catalan", "Hankel determinants of C_n", default_n=8)
def _hankel(n):
    moments = moments_of(seq.catalan, 2 * n)
    return verdict(_seq_witness("det(C_{i+j})", lambda k: hankel(moments, k), lambda k: 1, range(1, n + 1)))


@check("oracle-triangle", "triangle recursion vs path enumeration", default_n=10, max_n=12)
def _oracle(n):
    for cf_id, entry in REGISTRY.items():
        tri = triangle(entry.cf, n)
        for m in range(n + 1):
            brute = brute_weights(m, entry.cf)
            for k in range(m + 1):
                if tri(m, k) != brute[k]:
                    return verdict(f"{cf_id}: a({m},{k}) = {render(tri(m, k))} but paths sum to {render(brute[k])}")
        # explicit path lists on the smaller rows
        for m in range(min(n, 6) + 1):
            for k in range(m + 1):
                if tri(m, k) != brute_weight(m, k, entry.cf):
                    return verdict(f"{cf_id}: enumerate_paths disagrees at ({m},{k})")
    unit = triangle(REGISTRY["example1"].cf, 2 * min(n, 6))
    return verdict(_seq_witness("Dyck paths counted by C_n", lambda k: unit(2 * k, 0), seq.catalan, range(min(n, 6) + 1)))


# ------------------------------------------------------------------ q = -1


@check("eq32-vs-33", "c_n(t) closed form vs recursion", default_n=40)
def _eq32_33(n):
    return verdict(
        _seq_witness("c_n closed vs recursion", seq.c_neg1_closed, seq.c_neg1_rec, range(n + 1)),
        _seq_witness("c_n(1) = C_n(-1)", lambda k: seq.c_neg1_closed(k)(1), seq.catalan_neg1, range(n + 1)),
        _seq_witness("c_n palindromic", lambda k: seq.c_neg1_closed(k).is_palindromic(), lambda k: True, range(n + 1)),
    )


@check("eq35", "g(t,z) closed form")
def _eq35(n):
    g = cf.gf_g(n)
    G2 = cf.at_t2_z2(cf.gf_narayana_shift, n)
    lhs = z_poly([ONE_POLY, -(ONE_POLY + T)], n) * g
    return verdict(
        _coeff_witness("g(t,z) vs c_{n+1}(t)", g, lambda k: seq.c_neg1_closed(k + 1)),
        _series_witness("(1-(1+t)z) g = 1 - z^2 t G(t^2,z^2)", lhs, 1 - _mul_z(G2 * T, 2, n)),
    )


@check("eq36", "g(t,z) g(t,-z) = G(t^2,z^2)")
def _eq36(n):
    g = cf.gf_g(n)
    return verdict(_series_witness("g(t,z) g(t,-z) = G(t^2,z^2)", g * _neg_z(g), cf.at_t2_z2(cf.gf_narayana_shift, n)))


@check("eq37", "functional equation of g(t,z)")
def _eq37(n):
    g = cf.gf_g(n)
    lhs = z_poly([ONE_POLY, -(ONE_POLY + T)], n) * g
    return verdict(_series_witness("(1-(1+t)z) g = 1 - z^2 t g(t,z) g(t,-z)", lhs, 1 - _mul_z(g * _neg_z(g) * T, 2, n)))


@check("eq38", "g(t,z) continued fraction step")
def _eq38(n):
    g = cf.gf_g(n)
    den = 1 - z_poly([0, ONE_POLY + T], n) + _mul_z(_neg_z(g) * T, 2, n)
    return verdict(_series_witness("g = 1/(1 - (1+t)z + tz^2 g(t,-z))", g, series_div(_one(n), den)))


@check("eq40", "c_{2n+1}, c_{2n+2} as alternating path sums", default_n=20)
def _eq40(n):
    s, t = ONE_POLY + T, -T
    return verdict(
        _seq_witness("c_{2n+1}", lambda k: seq.c_neg1_closed(2 * k + 1), lambda k: lemma_weight(k, 0, s, t), range(n + 1)),
        _seq_witness("c_{2n+2}", lambda k: seq.c_neg1_closed(2 * k + 2), lambda k: lemma_weight(k, 1, s, t), range(n + 1)),
    )


def _c_pair(n):
    c = cf.gf_c(n)
    return c, _neg_z(_neg_t(c))


@check("eq42", "c(t,z) c(-t,-z) = C(t^2,z^2)")
def _eq42(n):
    c, c_mm = _c_pair(n)
    printed = z_poly([ONE_POLY, -(ONE_POLY + T)], n) * z_poly([ONE_POLY, ONE_POLY - T], n)
    eq21_den = z_poly([ONE_POLY, -T], n) ** 2 - z_poly([0, 0, 1], n, POLY)
    note = ("displayed denominator (1-(1+t)z)(1+(1-t)z) "
            + ("equals" if printed == eq21_den else "differs from")
            + " the denominator (1-tz)^2 - z^2 of the C(t^2,z^2) identity")
    return verdict(_series_witness("c(t,z) c(-t,-z) = C(t^2,z^2)", c * c_mm, cf.at_t2_z2(cf.gf_narayana, n)), note=note)


@check("eq43", "functional equation of c(t,z)")
def _eq43(n):
    c, c_mm = _c_pair(n)
    factor = 1 - z_poly([0, ONE_POLY + T], n) + _mul_z(c_mm * T, 1, n)
    return verdict(_series_witness("c(t,z)(1 - (1+t)z + tz c(-t,-z)) = 1", c * factor, _one(n)))


@check("eq45", "c(t,z) in terms of c(t,-z)")
def _eq45(n):
    c = cf.gf_c(n)
    tzc = _mul_z(_neg_z(c) * T, 1, n)
    return verdict(_series_witness("c(t,z)(1 - z - tz c(t,-z)) = 1 - tz c(t,-z)", c * (1 - z_poly([0, 1], n) - tzc), 1 - tzc))


@check("eq46", "c(t,z^2) continued fraction step")
def _eq46(n):
    c2 = cf.at_z2(cf.gf_c, n)
    c_neg = series_subst_z(_neg_z(cf.gf_c((n + 1) // 2)), "z^2").truncate(n)
    inner = 1 - _mul_z(c_neg * T, 2, n)
    rhs = series_div(_one(n), 1 - _mul_z(series_div(_one(n), inner), 2, n))
    return verdict(
        _series_witness("c(t,z^2) = 1/(1 - z^2/(1 - tz^2 c(t,-z^2)))", c2, rhs),
        _coeff_witness("c(t,z^2) vs interleaved c_n(t)", c2, interleave_zeros(seq.c_neg1_closed)),
    )


@check("eq48", "explicit radical form of c(t,z)")
def _eq48(n):
    return verdict(_coeff_witness("explicit c(t,z) vs c_n(t)", cf.gf_c(n), seq.c_neg1_closed))


# ------------------------------------------------------------- odd part, W


@check("eq50-vs-48", "gamma form of c(t,z)")
def _eq50(n):
    return verdict(_series_witness("gamma form vs explicit form", cf.gf_c_gamma(n), cf.gf_c(n)))


@check("eq51", "gamma product identities")
def _eq51(n):
    report = cf.gamma4_identities(n)
    bad = [k for k, ok in report.items() if not ok]
    return verdict(f"failed: {', '.join(bad)}" if bad else None, note=f"{len(report)} gamma identities")


@check("eq52", "C(t^2,z^2) via sqrt(gamma4): exponent of z")
def _eq52(n):
    lhs = cf.gf_narayana_t2z2_gamma(n)
    readings = {
        "C(t^2, z^2)": cf.at_t2_z2(cf.gf_narayana, n),
        "C(t^2, z^1)": series_map_t(cf.gf_narayana(n), "t^2"),
    }
    return _adjudicate("right-hand side of the sqrt(gamma4) form", lhs, readings)


@check("eq53", "single-radical form of c(t,z)")
def _eq53(n):
    return verdict(_series_witness("single-radical c(t,z)", cf.gf_c_single_radical(n), cf.gf_c(n)))


@check("eq54", "coefficients of the W(t,z) closed form")
def _eq54(n):
    W = cf.gf_W(n)
    readings = {
        "W_n(t) = sum binom(n,k) t^k": Series([seq.w_binomial(k) for k in range(n + 1)], n, POLY),
        "W_n(t) = sum binom(n,k)^2 t^k": Series([seq.w_binomial_sq(k) for k in range(n + 1)], n, POLY),
    }
    return _adjudicate("coefficients of 1/sqrt(1 - 2(t+1)z + (t-1)^2 z^2)", W, readings)


@check("eq55", "W(t^2,z^2) = 1/sqrt(gamma4)")
def _eq55(n):
    return verdict(_series_witness("W(t^2,z^2) = 1/sqrt(gamma4)", cf.gf_W_t2z2_gamma(n), cf.at_t2_z2(cf.gf_W, n)))


@check("eq56", "w_n(t) from q-binomials at q = -1", default_n=30)
def _eq56(n):
    return verdict(
        _seq_witness("w_n from q-binomials at q=-1", seq.w_q_neg1, seq.w_neg1, range(n + 1)),
        _seq_witness("w_n from squared q-binomials at q=-1", lambda k: seq.w_q_neg1(k, squared=True),
                     lambda k: seq.w_neg1(k, squared=True), range(n + 1)),
        note="holds for both readings of W_n",
    )


@check("eq57", "w(t,z) = gamma W(t^2,z^2)")
def _eq57(n):
    w = cf.gf_w(n)
    literal = Series([seq.w_neg1(k) for k in range(n + 1)], n, POLY)
    note = "uses W_n = sum binom(n,k)^2 t^k (see eq54); with W_n = (1+t)^n the identity " + (
        "also holds" if literal.agrees_with(w) else "fails")
    return verdict(
        _coeff_witness("gamma(t,z) W(t^2,z^2) vs w_n", w, lambda k: seq.w_neg1(k, squared=True)),
        _series_witness("gamma(t,z) W(t^2,z^2) = gamma/sqrt(gamma4)",
                        w, cf.gamma_series(cf.GammaSigns(1, 1), n) * cf.gf_W_t2z2_gamma(n)),
        note=note,
    )


@check("eq58", "single-radical form of w(t,z)")
def _eq58(n):
    return verdict(_series_witness("single-radical w(t,z)", cf.gf_w_single_radical(n), cf.gf_w(n)))


@check("eq59", "h(t,z^2) forms and its continued fraction step")
def _eq59(n):
    hz2 = cf.gf_h_z2(n)
    C2 = cf.at_t2_z2(cf.gf_narayana, n)
    chain = 1 - z_poly([0, 0, ONE_POLY + T], n) - _mul_z(C2 * (T * T), 2, n)
    return verdict(
        _coeff_witness("h(t,z^2) vs interleaved c_{2n+1}", hz2, interleave_zeros(lambda k: seq.c_neg1_closed(2 * k + 1))),
        _series_witness("gamma form vs expanded form", hz2, cf.gf_h_z2_expanded(n)),
        _series_witness("c(t,z) - 1 = z gamma(t,z) h(t,z^2)", (cf.gf_c(n + 1) - 1).shift_down(1),
                        cf.gamma_series(cf.GammaSigns(1, 1), n) * hz2),
        _series_witness("1/h(t,z^2) = 1 - (1+t)z^2 - t^2z^2 C(t^2,z^2)", series_div(_one(n), hz2), chain),
    )


@check("c-odd-formula", "c_{2n+1}(t) = W_n(t^2) + n t C_n(t^2)", default_n=30)
def _c_odd(n):
    target = Series([seq.c_neg1_closed(2 * k + 1) for k in range(n + 1)], n, POLY)
    readings = {
        "W_n(t) = (1+t)^n": Series([seq.c_odd(k) for k in range(n + 1)], n, POLY),
        "W_n(t) = sum binom(n,k)^2 t^k": Series([seq.c_odd(k, squared=True) for k in range(n + 1)], n, POLY),
    }
    return _adjudicate("c_{2n+1}(t) from the binomial formula", target, readings)


def _adjudicate(label: str, lhs: Series, readings: dict[str, Series]) -> Outcome:
    held, failed = [], []
    for name, rhs in readings.items():
        i = lhs.first_mismatch(rhs)
        if i is None:
            held.append(name)
        else:
            failed.append(f"{name} fails at z^{i} ({render(lhs[i])} vs {render(rhs[i])})")
    note = f"{label}: " + "; ".join([f"{name} holds" for name in held] + failed)
    if not held:
        return Outcome(FAIL, note, note)
    return Outcome(FLAGGED, None, note)


# --------------------------------------------------------------------- driver


def check_ids() -> list[str]:
    return sorted(CHECKS)


def run_check(check_id: str, n: int | None = None) -> CheckResult:
    try:
        spec = CHECKS[check_id]
    except KeyError:
        raise UnknownId(check_id) from None
    if n is None:
        n = spec.default_n
    if n < 0:
        raise ValueError("order must be >= 0")
    if spec.max_n is not None:
        n = min(n, spec.max_n)
    start = time.perf_counter()
    try:
        out = spec.fn(n)
    except ArithmeticError as exc:
        out = Outcome(FAIL, f"{type(exc).__name__}: {exc}")
    return CheckResult(check_id, out.status, n, out.witness, out.note, time.perf_counter() - start)


def run_all(n: int | None = None, ids=None) -> list[CheckResult]:
    """Run every check (or those in ``ids`` that exist), sorted by id."""
    selected = check_ids() if ids is None else sorted(i for i in ids if i in CHECKS)
    return [run_check(i, n) for i in selected]
