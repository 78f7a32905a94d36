"""Jacobi continued fractions: moments <-> (s_k, t_k).

:func:`expand` turns weights into moments through the Motzkin triangle.
:func:`extract` inverts it: it builds the monic orthogonal polynomials
``p_{n+1} = (x - s_n) p_n - t_{n-1} p_{n-1}`` for the functional
``L(x^j) = a_j`` and reads off ``s_n = L(x p_n^2) / L(p_n^2)`` and
``t_{n-1} = L(p_n^2) / L(p_{n-1}^2)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import (
    DOMAINS,
    POLY,
    ONE_POLY,
    T,
    coerce,
    domain_of,
    exact_div,
    is_zero,
    one,
    to_field,
    zero,
)
from .errors import InsufficientMoments, SingularMoment, UnknownId
from .motzkin import CFSpec, triangle
from .sequences import c_neg1_closed, catalan, catalan_neg1, narayana

# ------------------------------------------------------------------ moments


def shift(seq: Callable[[int], object], k: int = 1) -> Callable[[int], object]:
    """``n -> seq(n + k)``."""
    return lambda n: seq(n + k)


def interleave_zeros(seq: Callable[[int], object]) -> Callable[[int], object]:
    """``(a_0, 0, a_1, 0, a_2, ...)``."""
    def gen(n):
        if n % 2:
            return 0 * seq(0)
        return seq(n // 2)

    return gen


def moments_of(seq: Callable[[int], object], N: int) -> list:
    return [seq(n) for n in range(N + 1)]


def expand(cf: CFSpec, N: int) -> list:
    """Moments ``a_0 .. a_N`` of the continued fraction, ``a_n = a(n, 0)``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return triangle(cf, N).moments()


# ---------------------------------------------------------------- extraction


@dataclass(frozen=True)
class Extraction:
    s: list
    t: list

    def is_polynomial(self) -> bool:
        return all(_is_poly_value(x) for x in self.s + self.t)

    def as_polys(self) -> tuple[list, list]:
        return [_poly_value(x) for x in self.s], [_poly_value(x) for x in self.t]


def _is_poly_value(x) -> bool:
    return not hasattr(x, "is_polynomial") or x.is_polynomial()


def _poly_value(x):
    return x.to_poly() if hasattr(x, "to_poly") else x


def _apply_L(p: list, a: list, offset: int = 0):
    """``L(x^offset * p)`` for ``p`` given by coefficient list."""
    acc = 0
    for i, c in enumerate(p):
        if not is_zero(c):
            acc = acc + c * a[i + offset]
    return acc


def _pmul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if is_zero(x):
            continue
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return out


def extract(moments: Sequence, depth: int) -> Extraction:
    """Recover ``s_0..s_{depth-1}`` and ``t_0..t_{depth-2}`` from moments.

    Values are Fractions for rational moments and :class:`RatFunc` for
    polynomial moments.  Needs at least ``2*depth + 1`` moments with
    ``a_0 = 1``.  Raises :class:`SingularMoment` (carrying the prefix found
    so far) when a norm ``L(p_n^2)`` vanishes.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if len(moments) < 2 * depth + 1:
        raise InsufficientMoments(f"depth {depth} needs {2 * depth + 1} moments, got {len(moments)}")
    if depth == 0:
        return Extraction([], [])
    a = [to_field(m) for m in moments]
    if a[0] != 1:
        raise ValueError("moment sequences are normalised to a_0 = 1")
    f_one = a[0]
    f_zero = f_one - f_one
    s, t = [], []
    p_prev, p = None, [f_one]
    norm_prev = None
    for n in range(depth):
        sq = _pmul(p, p)
        norm = _apply_L(sq, a)
        if is_zero(norm):
            raise SingularMoment(n, s, t)
        if n >= 1:
            t.append(norm / norm_prev)
        s_n = _apply_L(sq, a, 1) / norm
        s.append(s_n)
        if n == depth - 1:
            break
        # p_{n+1} = (x - s_n) p_n - t_{n-1} p_{n-1}
        nxt = [f_zero] + list(p)
        for i, c in enumerate(p):
            nxt[i] = nxt[i] - s_n * c
        if p_prev is not None:
            for i, c in enumerate(p_prev):
                nxt[i] = nxt[i] - t[-1] * c
        p_prev, p, norm_prev = p, nxt, norm
    return Extraction(s, t)


def hankel(moments: Sequence, n: int):
    """Exact ``det(a_{i+j})_{i,j<n}`` by fraction-free (Bareiss) elimination."""
    if n == 0:
        return 1
    if len(moments) < 2 * n - 1:
        raise InsufficientMoments(f"order {n} Hankel needs {2 * n - 1} moments")
    dom = max((domain_of(m) for m in moments[: 2 * n - 1]), key=DOMAINS.index)
    M = [[coerce(moments[i + j], dom) for j in range(n)] for i in range(n)]
    sign = 1
    prev = one(dom)
    for k in range(n - 1):
        if is_zero(M[k][k]):
            for r in range(k + 1, n):
                if not is_zero(M[r][k]):
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return zero(dom)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev, dom)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


# ------------------------------------------------------------------ registry


@dataclass(frozen=True)
class NamedCF:
    id: str
    cf: CFSpec
    moments: Callable[[int], object] = field(repr=False)
    location: str
    moment_desc: str

    def moment_list(self, N: int) -> list:
        return moments_of(self.moments, N)


def _alt(k):
    return 1 if k % 2 == 0 else -1


ONE_PLUS_T = ONE_POLY + T
ONE_MINUS_T = ONE_POLY - T
T2 = T * T


def _registry() -> dict[str, NamedCF]:
    entries = [
        NamedCF("example1", CFSpec.constant(0, 1), interleave_zeros(catalan),
                "s_k = 0, t_k = 1", "C_n interleaved with zeros"),
        NamedCF("example2", CFSpec.constant(2, 1), shift(catalan),
                "s_k = 2, t_k = 1", "C_{n+1}"),
        NamedCF("example3", CFSpec(lambda k: 1 if k == 0 else 2, lambda k: 1), catalan,
                "s_0 = 1, s_k = 2, t_k = 1", "C_n"),
        NamedCF("example4", CFSpec(lambda k: 0, lambda k: 1 if k % 2 == 0 else T, POLY),
                interleave_zeros(narayana), "s_k = 0, t_2k = 1, t_2k+1 = t", "C_n(t) interleaved with zeros"),
        NamedCF("example5", CFSpec.constant(ONE_PLUS_T, T, POLY), shift(narayana),
                "s_k = 1+t, t_k = t", "C_{n+1}(t)"),
        NamedCF("example6", CFSpec(lambda k: ONE_POLY if k == 0 else ONE_PLUS_T, lambda k: T, POLY),
                narayana, "s_0 = 1, s_k = 1+t, t_k = t", "C_n(t)"),
        NamedCF("thm1", CFSpec(lambda k: ONE_PLUS_T * _alt(k), lambda k: -T, POLY),
                shift(c_neg1_closed), "s_k = (-1)^k (1+t), t_k = -t", "c_{n+1}(t)"),
        NamedCF("thm2", CFSpec(lambda k: ONE_POLY if k == 0 else ONE_MINUS_T * _alt(k), lambda k: T, POLY),
                c_neg1_closed, "s_0 = 1, s_k = (-1)^k (1-t), t_k = t", "c_n(t)"),
        NamedCF("thm3", CFSpec(lambda k: 0, lambda k: _alt(k // 2) * (ONE_POLY if k % 2 == 0 else T), POLY),
                interleave_zeros(c_neg1_closed), "s_k = 0, t_k = (-1)^floor(k/2) t^(k mod 2)", "c_n(t) interleaved with zeros"),
        NamedCF("thm4", CFSpec(lambda k: ONE_PLUS_T + T2 if k == 0 else ONE_POLY + T2, lambda k: T2, POLY),
                lambda n: c_neg1_closed(2 * n + 1), "s_0 = 1+t+t^2, s_k = 1+t^2, t_k = t^2", "c_{2n+1}(t)"),
        NamedCF("eq47", CFSpec(lambda k: 0, lambda k: _alt(k * (k - 1) // 2)),
                interleave_zeros(catalan_neg1), "s_k = 0, t_k = (-1)^binom(k,2)", "C_n(-1) interleaved with zeros"),
    ]
    return {e.id: e for e in entries}


REGISTRY = _registry()


def named_cf(cf_id: str) -> NamedCF:
    try:
        return REGISTRY[cf_id]
    except KeyError:
        raise UnknownId(cf_id) from None
