"""Exact Jacobi continued fractions for Catalan, Narayana and q = -1 Narayana sequences."""
from .algebra import Poly, RatFunc, Series, T
from .jfraction import expand, extract, hankel, named_cf
from .motzkin import CFSpec, brute_weight, lemma_weight, triangle

__version__ = "0.1.0"

__all__ = [
    "CFSpec",
    "Poly",
    "RatFunc",
    "Series",
    "T",
    "brute_weight",
    "expand",
    "extract",
    "hankel",
    "lemma_weight",
    "named_cf",
    "triangle",
]
