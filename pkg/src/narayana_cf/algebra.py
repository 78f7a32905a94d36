"""Exact arithmetic kernel.

Three coefficient domains are supported:

``Rational``
    plain Python ``int`` and :class:`fractions.Fraction` values.
``Poly``
    :class:`Poly`, dense polynomials in ``t`` over the rationals.
``RatFunc``
    :class:`RatFunc`, reduced quotients of two :class:`Poly`.

:class:`Series` is a truncated power series in ``z`` whose coefficients all
live in one of these domains.  Every object is immutable.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    BadConstantTerm,
    DivisionByZero,
    DomainMismatch,
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    NotDivisible,
    ZShiftNonzero,
)

RATIONAL = "Rational"
POLY = "Poly"
RATFUNC = "RatFunc"
DOMAINS = (RATIONAL, POLY, RATFUNC)

Scalar = Union[int, Fraction]


def _scalar(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"not an exact rational: {c!r}")


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction))


class Poly:
    """Dense univariate polynomial in ``t`` with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({render_poly(self)!r})"

    def __str__(self):
        return render_poly(self)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if _is_scalar(other):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return ZERO_POLY
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE_POLY, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        return self * _scalar(c)

    def __call__(self, x):
        """Evaluate at ``x`` (a rational or another :class:`Poly`) by Horner's rule."""
        acc = 0 if _is_scalar(x) else ZERO_POLY
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _scalar(acc) if _is_scalar(acc) else acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading()
        if len(rem) <= db:
            return ZERO_POLY, self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c:
                q = Fraction(c) / lead
                quot[k] = q
                for j, bj in enumerate(other.coeffs):
                    rem[k + j] -= q * bj
        return Poly(quot), Poly(rem[:db])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (Fraction(1) / self.leading())

    def reversed(self) -> "Poly":
        return Poly(reversed(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


ZERO_POLY = Poly()
ONE_POLY = Poly((1,))
T = Poly((0, 1))


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    return {"add": operator.add, "sub": operator.sub, "mul": operator.mul}[op](a, b)


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Return ``q`` with ``a == q * b``; raise :class:`NotDivisible` otherwise."""
    if b.is_zero():
        raise DivisionByZero("exact division by the zero polynomial")
    if len(b) == 1:
        return a * (Fraction(1) / Fraction(b.coeffs[0]))
    # division by t^k is the common case (removable singularities)
    if all(c == 0 for c in b.coeffs[:-1]):
        k = b.degree
        if any(a.coeffs[:k]):
            raise NotDivisible(f"{render_poly(a)} is not divisible by {render_poly(b)}")
        return Poly(a.coeffs[k:]) * (Fraction(1) / Fraction(b.leading()))
    q, r = a.divmod(b)
    if not r.is_zero():
        raise NotDivisible(f"{render_poly(a)} is not divisible by {render_poly(b)}")
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def poly_subst(p: Poly, mapping) -> Poly:
    """Substitute into ``p``.

    ``mapping`` is ``"-t"`` for t -> -t, ``"t^2"`` for t -> t^2, a rational
    constant (the result is then a constant polynomial), or a :class:`Poly`.
    """
    if mapping == "-t":
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs))
    if mapping == "t^2":
        out = [0] * (2 * len(p.coeffs))
        out[::2] = p.coeffs
        return Poly(out)
    if isinstance(mapping, Poly):
        return p(mapping)
    return Poly.const(p(_scalar(mapping)))


class RatFunc:
    """Reduced rational function ``num / den`` with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE_POLY, *, _reduced=False):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE_POLY
            elif not den.is_constant():
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = poly_exact_div(num, g)
                    den = poly_exact_div(den, g)
            lead = Fraction(den.leading())
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == ONE_POLY

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly) or _is_scalar(other):
            return self.is_polynomial() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def __repr__(self):
        return f"RatFunc({render(self)!r})"

    def __str__(self):
        return render(self)

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den, _reduced=self.is_polynomial())
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc(self.num * other.num, _reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratfunc(other) * self.inverse()


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly) or _is_scalar(x):
        return RatFunc(x, _reduced=True)
    return None


def ratfunc_reduce(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)


# ---------------------------------------------------------------- domains


def domain_of(x) -> str:
    if isinstance(x, RatFunc):
        return RATFUNC
    if isinstance(x, Poly):
        return POLY
    if _is_scalar(x):
        return RATIONAL
    raise TypeError(f"no exact domain for {x!r}")


def coerce(x, domain: str):
    """Embed ``x`` into ``domain`` (Rational -> Poly -> RatFunc)."""
    if domain == RATIONAL:
        if isinstance(x, Poly) and x.is_constant():
            return x.constant_term()
        if isinstance(x, RatFunc) and x.is_polynomial() and x.num.is_constant():
            return x.num.constant_term()
        return _scalar(x)
    if domain == POLY:
        if isinstance(x, RatFunc):
            return x.to_poly()
        return _as_poly(x)
    if domain == RATFUNC:
        r = _as_ratfunc(x)
        if r is None:
            raise TypeError(f"cannot embed {x!r} in RatFunc")
        return r
    raise ValueError(f"unknown domain {domain!r}")


def zero(domain: str):
    return coerce(0, domain)


def one(domain: str):
    return coerce(1, domain)


def is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, (Poly, RatFunc)) else x == 0


def field_of(domain: str) -> str:
    return RATIONAL if domain == RATIONAL else RATFUNC


def to_field(x):
    """Embed into the fraction field: Rational stays Rational, polynomials become RatFunc."""
    if _is_scalar(x):
        return Fraction(x)
    return coerce(x, RATFUNC)


def invert(x, domain: str):
    """Multiplicative inverse within ``domain``; raise if ``x`` is not a unit."""
    if domain == RATIONAL:
        if x == 0:
            raise NonInvertibleConstantTerm("zero is not invertible")
        return _scalar(Fraction(1) / Fraction(x))
    if domain == POLY:
        if x.is_zero() or not x.is_constant():
            raise NonInvertibleConstantTerm(f"{render(x)} is not a unit in Q[t]")
        return Poly.const(Fraction(1) / Fraction(x.constant_term()))
    if x.is_zero():
        raise NonInvertibleConstantTerm("zero is not invertible")
    return x.inverse()


def exact_div(a, b, domain: str):
    """Exact quotient in ``domain``."""
    if domain == RATIONAL:
        if b == 0:
            raise DivisionByZero("division by zero")
        return _scalar(Fraction(a) / Fraction(b))
    if domain == POLY:
        return poly_exact_div(a, _as_poly(b))
    return a / b


# ---------------------------------------------------------------- rendering


def _render_scalar(c: Scalar) -> str:
    c = _scalar(c)
    return str(c)


def render_poly(p: Poly, var: str = "t") -> str:
    """Canonical ascending-power rendering, e.g. ``1 - 2*t + t^2``."""
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _render_scalar(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{_render_scalar(mag)}*{power}"
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def render(x) -> str:
    if isinstance(x, RatFunc):
        if x.is_polynomial():
            return render_poly(x.num)
        return f"({render_poly(x.num)})/({render_poly(x.den)})"
    if isinstance(x, Poly):
        return render_poly(x)
    return _render_scalar(x)


# ---------------------------------------------------------------- series


class Series:
    """Power series in ``z`` truncated after ``z**order``.

    Coefficients of ``z**0 .. z**order`` are exact; nothing is known beyond.
    """

    __slots__ = ("domain", "coeffs")

    def __init__(self, coeffs: Iterable, order: int, domain: str = RATIONAL):
        if domain not in DOMAINS:
            raise ValueError(f"unknown domain {domain!r}")
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [coerce(c, domain) for c in list(coeffs)[: order + 1]]
        cs.extend(zero(domain) for _ in range(order + 1 - len(cs)))
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _raw(cls, coeffs, domain):
        s = object.__new__(cls)
        object.__setattr__(s, "domain", domain)
        object.__setattr__(s, "coeffs", tuple(coeffs))
        return s

    @classmethod
    def constant(cls, c, order: int, domain: str = RATIONAL) -> "Series":
        return cls([c], order, domain)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int, domain: str) -> "Series":
        return cls([f(n) for n in range(order + 1)], order, domain)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def __repr__(self):
        body = ", ".join(render(c) for c in self.coeffs)
        return f"Series([{body}], order={self.order}, domain={self.domain})"

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.domain != self.domain:
            raise DomainMismatch(f"{self.domain} series combined with {other.domain} series")

    def __neg__(self):
        return Series._raw((-c for c in self.coeffs), self.domain)

    def __add__(self, other):
        if not isinstance(other, Series):
            return self + Series.constant(other, self.order, self.domain)
        self._check(other)
        n = min(self.order, other.order) + 1
        return Series._raw((a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), self.domain)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        if not isinstance(other, Series):
            return self + (-coerce(other, self.domain))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = coerce(other, self.domain)
            return Series._raw((a * c for a in self.coeffs), self.domain)
        self._check(other)
        n = min(self.order, other.order) + 1
        a, b = self.coeffs, other.coeffs
        z = zero(self.domain)
        nz_a = [i for i in range(n) if not is_zero(a[i])]
        out = [z] * n
        for k in range(n):
            acc = z
            for i in nz_a:
                if i > k:
                    break
                acc = acc + a[i] * b[k - i]
            out[k] = acc
        return Series._raw(out, self.domain)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if not isinstance(other, Series):
            inv = invert(coerce(other, self.domain), self.domain)
            return self * inv
        return series_div(self, other)

    def __pow__(self, k: int):
        result = Series.constant(1, self.order, self.domain)
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series._raw(self.coeffs[: order + 1], self.domain)

    def lift(self, domain: str) -> "Series":
        if domain == self.domain:
            return self
        return Series(self.coeffs, self.order, domain)

    def map(self, fn: Callable, domain: str | None = None) -> "Series":
        """Apply ``fn`` to every coefficient."""
        return Series([fn(c) for c in self.coeffs], self.order, domain or self.domain)

    def shift_up(self, k: int = 1) -> "Series":
        """Multiply by ``z**k``; the order grows by ``k``."""
        return Series._raw([zero(self.domain)] * k + list(self.coeffs), self.domain)

    def shift_down(self, k: int = 1) -> "Series":
        """Divide by ``z**k``; the first ``k`` coefficients must be exactly zero."""
        if k > self.order:
            raise ValueError(f"cannot divide a series of order {self.order} by z^{k}")
        for i in range(k):
            if not is_zero(self.coeffs[i]):
                raise ZShiftNonzero(f"coefficient of z^{i} is {render(self.coeffs[i])}, not 0")
        return Series._raw(self.coeffs[k:], self.domain)

    def first_mismatch(self, other: "Series") -> int | None:
        """Smallest index (within the common order) where the coefficients differ."""
        self._check(other)
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def agrees_with(self, other: "Series") -> bool:
        return self.first_mismatch(other) is None


def series_arith(f: Series, g: Series, op: str) -> Series:
    f._check(g)
    return {"add": operator.add, "sub": operator.sub, "mul": operator.mul}[op](f, g)


def series_div(f: Series, g: Series) -> Series:
    """Quotient ``f / g``; the constant term of ``g`` must be a unit."""
    f._check(g)
    dom = f.domain
    inv = invert(g.coeffs[0], dom)
    n = min(f.order, g.order) + 1
    b = g.coeffs
    nz_b = [i for i in range(1, n) if not is_zero(b[i])]
    out = []
    for k in range(n):
        acc = f.coeffs[k]
        for i in nz_b:
            if i > k:
                break
            acc = acc - b[i] * out[k - i]
        out.append(acc * inv)
    return Series._raw(out, dom)


_HALF = Fraction(1, 2)


def series_sqrt(f: Series) -> Series:
    """Square root with constant term 1, by matching coefficients of the square."""
    if f.coeffs[0] != one(f.domain):
        raise BadConstantTerm(f"sqrt needs constant term 1, got {render(f.coeffs[0])}")
    c = [f.coeffs[0]]
    dom = f.domain
    z = zero(dom)
    for n in range(1, f.order + 1):
        acc = z
        for i in range(1, (n + 1) // 2):
            acc = acc + c[i] * c[n - i]
        acc = acc + acc
        if n % 2 == 0:
            acc = acc + c[n // 2] * c[n // 2]
        c.append((f.coeffs[n] - acc) * _HALF)
    return Series._raw(c, dom)


def series_compose(f: Series, g: Series) -> Series:
    """``f(g(z))``.  ``g`` must have zero constant term.

    A Rational-domain ``f`` is lifted into the domain of ``g``.
    """
    if not is_zero(g.coeffs[0]):
        raise NonzeroConstantTerm(f"inner series has constant term {render(g.coeffs[0])}")
    order = min(f.order, g.order)
    if f.domain != g.domain:
        f = f.lift(g.domain)
    g = g.truncate(order)
    acc = Series.constant(f.coeffs[order], order, g.domain)
    for k in range(order - 1, -1, -1):
        acc = acc * g + f.coeffs[k]
    return acc


def series_subst_z(f: Series, mapping: str) -> Series:
    """Substitute ``z -> -z`` (``"-z"``) or ``z -> z^2`` (``"z^2"``).

    For ``z^2`` a series known to order N yields one known to order 2N + 1.
    """
    if mapping == "-z":
        return Series._raw((c if n % 2 == 0 else -c for n, c in enumerate(f.coeffs)), f.domain)
    if mapping == "z^2":
        z = zero(f.domain)
        out = [z] * (2 * len(f.coeffs))
        out[::2] = f.coeffs
        return Series._raw(out, f.domain)
    raise ValueError(f"unsupported substitution {mapping!r}")


def series_even_part(f: Series) -> Series:
    """Inverse of ``z -> z^2``: keep even-index coefficients; odd ones must vanish."""
    for n in range(1, f.order + 1, 2):
        if not is_zero(f.coeffs[n]):
            raise ZShiftNonzero(f"odd coefficient z^{n} is {render(f.coeffs[n])}, not 0")
    return Series._raw(f.coeffs[::2], f.domain)


def series_map_t(f: Series, mapping) -> Series:
    """Apply :func:`poly_subst` to every coefficient of a Poly-domain series."""
    if f.domain != POLY:
        raise DomainMismatch("t-substitution needs a Poly-domain series")
    return Series._raw((poly_subst(c, mapping) for c in f.coeffs), POLY)


def series_exact_div(f: Series, d) -> Series:
    """Divide every coefficient exactly by the domain element ``d``."""
    return Series._raw((exact_div(c, d, f.domain) for c in f.coeffs), f.domain)


def z_poly(coeffs: Sequence, order: int, domain: str = POLY) -> Series:
    """A polynomial in ``z`` seen as a series of the given order."""
    return Series(coeffs, order, domain)
