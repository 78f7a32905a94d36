"""Tiny expression language for continued-fraction weights.

Supports integer literals, ``t``, the height index ``n``, ``+ - * / ^``,
parentheses and ``binom(a, b)``; enough for weights such as
``(-1)^n*(1+t)`` or ``(-1)^binom(n,2)``.  Rendered polynomials
(``1 - 2*t + 1/2*t^2``) parse back to themselves.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Callable

from .algebra import T, Poly, RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|(binom|t|n)|(.))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is not None and not tok.isspace():
            if m.group(3) and tok not in "+-*/^(),":
                raise ParseError(f"unexpected character {tok!r} in {text!r}")
            tokens.append(tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'} in {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")
        return node

    # each node is a callable n -> Poly | int | Fraction
    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = (lambda a, b: lambda n: a(n) + b(n))(node, rhs) if op == "+" else \
                (lambda a, b: lambda n: a(n) - b(n))(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            node = (lambda a, b: lambda n: a(n) * b(n))(node, rhs) if op == "*" else \
                (lambda a, b: lambda n: _divide(a(n), b(n)))(node, rhs)
        return node

    def unary(self):
        if self.peek() == "-":
            self.take()
            inner = self.unary()
            return lambda n: -inner(n)
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.unary()
            return lambda n: _power(base(n), exp(n))
        return base

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            v = int(tok)
            return lambda n: v
        if tok == "t":
            return lambda n: T
        if tok == "n":
            return lambda n: _index(n)
        if tok == "binom":
            self.take("(")
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take(")")
            return lambda n: comb(_as_int(a(n)), _as_int(b(n)))
        if tok == "(":
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def _index(n):
    if n is None:
        raise ParseError("the index n is not available here")
    return n


def _as_int(x) -> int:
    if isinstance(x, Poly):
        if not x.is_constant():
            raise ParseError(f"expected an integer, got {x}")
        x = x.constant_term()
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ParseError(f"expected an integer, got {x}")
        x = x.numerator
    return x


def _power(base, exp):
    k = _as_int(exp)
    if k < 0:
        raise ParseError("negative exponents are not supported")
    return base ** k


def _divide(a, b):
    if isinstance(b, RatFunc) or (isinstance(b, Poly) and not b.is_constant()):
        return RatFunc(a) / b
    if isinstance(b, Poly):
        b = b.constant_term()
    if b == 0:
        raise ParseError("division by zero")
    if isinstance(a, (Poly, RatFunc)):
        return a * (Fraction(1) / Fraction(b))
    return Fraction(a) / Fraction(b)


def _to_poly(v) -> Poly:
    if isinstance(v, RatFunc):
        if not v.is_polynomial():
            raise ParseError(f"{v} is not a polynomial")
        return v.num
    return v if isinstance(v, Poly) else Poly.const(v)


def parse_weight(text: str) -> Callable[[int], Poly]:
    """Compile ``text`` into a function of the height index ``n``."""
    node = _Parser(text).parse()
    return lambda n: _to_poly(node(n))


def parse_poly(text: str) -> Poly:
    """Parse a polynomial in ``t`` (no index ``n`` allowed)."""
    return _to_poly(_Parser(text).parse()(None))


def parse_value(text: str) -> Poly | RatFunc:
    """Parse a rendered polynomial or rational function ``(p)/(q)``."""
    v = _Parser(text).parse()(None)
    if isinstance(v, RatFunc):
        return v.num if v.is_polynomial() else v
    return _to_poly(v)
