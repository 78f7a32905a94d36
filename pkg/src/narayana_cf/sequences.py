"""Generators for the Catalan/Narayana family and their q = -1 relatives.

All sequences are 0-based with ``C_0(t) = c_0(t) = W_0(t) = 1``.  Integer
sequences return ``int``; polynomial sequences return :class:`Poly` in ``t``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import ONE_POLY, T, Poly, poly_subst
from .errors import UnknownId

ONE_PLUS_T = ONE_POLY + T


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_neg1(n: int) -> int:
    """Value of the q-Catalan number at q = -1, ``binom(n, n // 2)``."""
    return comb(n, n // 2)


@lru_cache(maxsize=None)
def narayana(n: int) -> Poly:
    """Narayana polynomial ``sum_k binom(n,k) binom(n-1,k) t^k / (k+1)``."""
    if n == 0:
        return ONE_POLY
    coeffs = [Fraction(comb(n, k) * comb(n - 1, k), k + 1) for k in range(n)]
    for k, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ArithmeticError(f"Narayana coefficient ({n},{k}) = {c} is not integral")
    return Poly(coeffs)


def _v(n: int, k: int) -> int:
    a, b = (n - 1) // 2, n // 2
    i, j = k // 2, (k + 1) // 2
    if i > a or j > b:
        return 0
    return comb(a, i) * comb(b, j)


@lru_cache(maxsize=None)
def c_neg1_closed(n: int) -> Poly:
    """q-Narayana polynomial at q = -1 from its binomial coefficient formula."""
    if n == 0:
        return ONE_POLY
    return Poly(_v(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def c_neg1_rec(n: int) -> Poly:
    """Same polynomials via c_{2m} = (1+t) c_{2m-1}, c_{2m+1} = (1+t) c_{2m} - t C_m(t^2)."""
    if n <= 1:
        return ONE_POLY
    prev = ONE_PLUS_T * c_neg1_rec(n - 1)
    if n % 2 == 0:
        return prev
    return prev - T * poly_subst(narayana(n // 2), "t^2")


def w_binomial(n: int) -> Poly:
    """``sum_k binom(n,k) t^k = (1+t)^n``."""
    return Poly(comb(n, k) for k in range(n + 1))


def w_binomial_sq(n: int) -> Poly:
    """``sum_k binom(n,k)^2 t^k``: the coefficients of 1/sqrt(1 - 2(1+t)z + (1-t)^2 z^2)."""
    return Poly(comb(n, k) ** 2 for k in range(n + 1))


def w_neg1(n: int, squared: bool = False) -> Poly:
    """``w_{2m} = W_m(t^2)``, ``w_{2m+1} = (1+t) w_{2m}``.

    ``squared`` selects ``W = w_binomial_sq`` instead of ``w_binomial``.
    """
    W = w_binomial_sq if squared else w_binomial
    even = poly_subst(W(n // 2), "t^2")
    return even if n % 2 == 0 else ONE_PLUS_T * even


def c_odd(n: int, squared: bool = False) -> Poly:
    """``W_n(t^2) + n t C_n(t^2)``, a candidate formula for ``c_{2n+1}(t)``.

    With ``squared=False`` W is ``(1+t)^n`` as literally defined; with
    ``squared=True`` W is ``sum binom(n,k)^2 t^k``.  Only the latter agrees
    with :func:`c_neg1_closed`; see the ``c-odd-formula`` check.
    """
    W = w_binomial_sq if squared else w_binomial
    return poly_subst(W(n), "t^2") + T * poly_subst(narayana(n), "t^2") * n


def touchard_sum(n: int) -> int:
    """``sum_k binom(n,2k) 2^(n-2k) C_k``; Touchard's identity says this is ``C_{n+1}``."""
    return sum(comb(n, 2 * k) * 2 ** (n - 2 * k) * catalan(k) for k in range(n // 2 + 1))


def coker_sum(n: int) -> Poly:
    """``sum_k binom(n,2k) C_k t^k (1+t)^(n-2k)``; Coker's identity says this is ``C_{n+1}(t)``."""
    total = Poly()
    for k in range(n // 2 + 1):
        total = total + Poly.monomial(k, comb(n, 2 * k) * catalan(k)) * ONE_PLUS_T ** (n - 2 * k)
    return total


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> Poly:
    """The q-binomial coefficient as a polynomial in ``q`` (Pascal-type recursion)."""
    if k < 0 or k > n:
        return Poly()
    if k == 0 or k == n:
        return ONE_POLY
    # [n,k] = [n-1,k-1] + q^k [n-1,k]
    return gaussian_binomial(n - 1, k - 1) + Poly.monomial(k) * gaussian_binomial(n - 1, k)


def w_q_neg1(n: int, squared: bool = False) -> Poly:
    """``sum_k [n,k]_q t^k`` evaluated at ``q = -1`` (or with squared q-binomials)."""
    coeffs = []
    for k in range(n + 1):
        v = gaussian_binomial(n, k)(-1)
        coeffs.append(v * v if squared else v)
    return Poly(coeffs)


SEQUENCES = {
    "catalan": catalan,
    "catalan_neg1": catalan_neg1,
    "narayana": narayana,
    "c_neg1": c_neg1_closed,
    "c_neg1_rec": c_neg1_rec,
    "w_binomial": w_binomial,
    "w_binomial_sq": w_binomial_sq,
    "w_neg1": w_neg1,
    "w_neg1_sq": lambda n: w_neg1(n, squared=True),
    "c_neg1_odd": lambda n: c_neg1_closed(2 * n + 1),
    "c_odd": c_odd,
    "c_odd_sq": lambda n: c_odd(n, squared=True),
}

SEQ_DOMAIN = {k: ("Rational" if k in ("catalan", "catalan_neg1") else "Poly") for k in SEQUENCES}


def sequence(seq_id: str):
    try:
        return SEQUENCES[seq_id]
    except KeyError:
        raise UnknownId(seq_id) from None


def values(seq_id: str, n_max: int) -> list:
    f = sequence(seq_id)
    return [f(n) for n in range(n_max + 1)]
