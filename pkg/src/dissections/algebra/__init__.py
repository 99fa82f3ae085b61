"""Exact arithmetic kernel: rationals, sparse polynomials, rational functions,
Groebner bases and elimination ideals."""

from fractions import Fraction as BigRational

from .gcd import ExactDivisionError, divexact, poly_gcd
from .groebner import buchberger, eliminate, poly_divmod, reduce_by_basis
from .orders import GREVLEX, LEX, TermOrder
from .poly import MultiPoly, ring, triangle_area
from .rational import RatFunc

__all__ = [
    "BigRational",
    "ExactDivisionError",
    "GREVLEX",
    "LEX",
    "MultiPoly",
    "RatFunc",
    "TermOrder",
    "buchberger",
    "divexact",
    "eliminate",
    "poly_divmod",
    "poly_gcd",
    "reduce_by_basis",
    "ring",
    "triangle_area",
]
