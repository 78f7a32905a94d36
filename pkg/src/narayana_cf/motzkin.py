"""Weighted Motzkin paths.

Up-steps weigh 1, a horizontal step at height ``k`` weighs ``s_k`` and a
down-step ending at height ``k`` weighs ``t_k``.  :func:`triangle` sums
path weights by the row recursion; :func:`brute_weight` enumerates paths
and serves as its oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from .algebra import RATIONAL, coerce, one, zero
from .sequences import catalan


@dataclass(frozen=True)
class CFSpec:
    """Height-indexed weights ``s_k`` and ``t_k`` of a Jacobi continued fraction."""

    s: Callable[[int], object]
    t: Callable[[int], object]
    domain: str = RATIONAL

    def s_at(self, k: int):
        return coerce(self.s(k), self.domain)

    def t_at(self, k: int):
        return coerce(self.t(k), self.domain)

    @classmethod
    def constant(cls, s, t, domain: str = RATIONAL) -> "CFSpec":
        return cls(lambda k: s, lambda k: t, domain)


@dataclass(frozen=True)
class Triangle:
    """Rows ``a(n, 0..n)`` for ``0 <= n <= n_max``."""

    n_max: int
    rows: tuple
    domain: str

    def __call__(self, n: int, k: int):
        if k < 0 or k > n:
            return zero(self.domain)
        return self.rows[n][k]

    def moments(self) -> list:
        return [row[0] for row in self.rows]


def triangle(cf: CFSpec, n_max: int) -> Triangle:
    """``a(n,k) = a(n-1,k-1) + s_k a(n-1,k) + t_k a(n-1,k+1)``, ``a(0,k) = [k=0]``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    dom = cf.domain
    z = zero(dom)
    s = [cf.s_at(k) for k in range(n_max + 1)]
    t = [cf.t_at(k) for k in range(n_max + 1)]
    rows = [(one(dom),)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            acc = prev[k - 1] if k >= 1 else z
            if k < n:
                acc = acc + s[k] * prev[k]
            if k + 1 < n:
                acc = acc + t[k] * prev[k + 1]
            row.append(acc)
        rows.append(tuple(row))
    return Triangle(n_max, tuple(rows), dom)


def _paths(n: int, k: int, height: int, prefix: list) -> Iterator[str]:
    remaining = n - len(prefix)
    if remaining == 0:
        if height == k:
            yield "".join(prefix)
        return
    for step, dh in (("U", 1), ("H", 0), ("D", -1)):
        h = height + dh
        if h < 0 or abs(h - k) > remaining - 1:
            continue
        prefix.append(step)
        yield from _paths(n, k, h, prefix)
        prefix.pop()


def enumerate_paths(n: int, k: int) -> list[str]:
    """All Motzkin paths of length ``n`` from height 0 to height ``k``, in U < H < D order."""
    if n > 16:
        raise ValueError("path enumeration is limited to n <= 16")
    if k < 0 or k > n:
        return []
    return list(_paths(n, k, 0, []))


def path_weight(path: str, cf: CFSpec):
    w = one(cf.domain)
    h = 0
    for step in path:
        if step == "U":
            h += 1
        elif step == "H":
            w = w * cf.s_at(h)
        else:
            h -= 1
            w = w * cf.t_at(h)
    return w


def brute_weights(n: int, cf: CFSpec) -> list:
    """Path-sum weights for every end height ``0..n`` at once.

    Depth-first over all non-negative step sequences with running products,
    so each prefix is multiplied out only once.
    """
    if n > 16:
        raise ValueError("path enumeration is limited to n <= 16")
    s = [cf.s_at(k) for k in range(n + 1)]
    t = [cf.t_at(k) for k in range(n + 1)]
    out = [zero(cf.domain)] * (n + 1)

    def walk(steps_left, h, w):
        if steps_left == 0:
            out[h] = out[h] + w
            return
        walk(steps_left - 1, h + 1, w)
        walk(steps_left - 1, h, w * s[h])
        if h > 0:
            walk(steps_left - 1, h - 1, w * t[h - 1])

    walk(n, 0, one(cf.domain))
    return out


def brute_weight(n: int, k: int, cf: CFSpec):
    """Sum of step-weight products over :func:`enumerate_paths` ``(n, k)``."""
    total = zero(cf.domain)
    for path in enumerate_paths(n, k):
        total = total + path_weight(path, cf)
    return total


def alternating_spec(s, t, domain: str = RATIONAL) -> CFSpec:
    """``s_k = (-1)^k s``, ``t_k = t``."""
    return CFSpec(lambda k: s if k % 2 == 0 else -s, lambda k: t, domain)


def lemma_weight(n: int, delta: int, s, t):
    """Total weight of length ``2n + delta`` paths back to height 0 for :func:`alternating_spec`.

    Equals ``sum_k binom(n,k) C_k t^k s^(2n+delta-2k)``.
    """
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    total = 0 * s
    for k in range(n + 1):
        total = total + (t ** k) * (s ** (2 * n + delta - 2 * k)) * (comb(n, k) * catalan(k))
    return total
