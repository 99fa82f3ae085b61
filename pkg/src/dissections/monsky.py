"""Canonical Monsky polynomials and their calculus.

The canonical pair is f = (sigma^d + p)/2 and f~ = (sigma^d - p)/2, where p
is the area polynomial of degree d; twice either of them agrees with
sigma^d on the area variety.  This module also decides membership for
arbitrary candidates, checks the defining identity symbolically on the
parameterized areas, restricts to living triangles, splits p into its
positive/negative parts, and measures smallness/positivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import MultiPoly, RatFunc, poly_divmod
from .areapoly import AreaPolynomial, _substitute_rationals
from .corpus import diagonal_case
from .errors import NotHomogeneous, NotMod2
from .model import ConstrainedTriangulation
from .param import area_system, build_parameterization

__all__ = [
    "MonskyPair", "PMSplit", "canonical_monsky", "diagonal_case",
    "is_monsky_polynomial", "is_positive", "is_small", "restrict_to_living",
    "split_pm", "verify_monsky_identity",
]


@dataclass
class MonskyPair:
    f: MultiPoly
    f_tilde: MultiPoly
    degree: int


def _sigma_power(vars, d):
    sigma = MultiPoly.zero(vars)
    for v in vars:
        sigma = sigma + MultiPoly.var(vars, v)
    return sigma ** d


def _halve(poly):
    if any(c.denominator != 1 or c.numerator % 2 for c in poly.terms.values()):
        raise NotMod2("polynomial has an odd coefficient; cannot halve exactly")
    return poly * Fraction(1, 2)


def canonical_monsky(ap: AreaPolynomial) -> MonskyPair:
    """The canonical pair ((sigma^d + p)/2, (sigma^d - p)/2), exact division."""
    sig_d = _sigma_power(ap.poly.vars, ap.degree)
    f = _halve(sig_d + ap.poly)
    f_tilde = _halve(sig_d - ap.poly)
    return MonskyPair(f, f_tilde, ap.degree)


def is_monsky_polynomial(f0: MultiPoly, ap: AreaPolynomial) -> bool:
    """Membership test: 2*f0 - sigma^e must be p times a cofactor congruent
    to sigma^(e-d) mod 2, with e the degree of f0."""
    if f0.is_zero() or not f0.is_homogeneous():
        raise NotHomogeneous("candidate must be homogeneous and nonzero")
    if not f0.has_integer_coefficients():
        raise ValueError("candidate must have integer coefficients")
    e = f0.total_degree()
    vars = ap.poly.vars
    f0 = f0.lift(vars)
    target = 2 * f0 - _sigma_power(vars, e)
    quotient, remainder = poly_divmod(target, ap.poly)
    if not remainder.is_zero():
        return False
    diff = quotient - _sigma_power(vars, e - ap.degree)
    return all(c.denominator == 1 and c.numerator % 2 == 0
               for c in diff.terms.values())


def verify_monsky_identity(f0: MultiPoly, ct: ConstrainedTriangulation) -> bool:
    """Symbolic check of 2*f0(W) = 1 on the fixed-corner area system."""
    par = build_parameterization(ct, fixed_corners=True)
    system = area_system(ct, par)
    value = _substitute_rationals(f0.lift(system.living), system.areas)
    return (2 * value - RatFunc.const(value.vars, 1)).is_zero()


def restrict_to_living(f_top: MultiPoly, dead_vars) -> MultiPoly:
    """Plug zero into the dead-triangle variables and shrink the ring."""
    dead = [v for v in f_top.vars if v in set(dead_vars)]
    zeroed = f_top.subs({v: 0 for v in dead})
    return zeroed.drop_vars(dead)


def _multinomial(d, exps):
    out = factorial(d)
    for e in exps:
        out //= factorial(e)
    return out


def is_small(p) -> tuple[bool, list[str]]:
    """Coefficient-wise comparison against the multinomials of sigma^d.

    Returns (verdict, violating monomials).  Small means both sigma^d - p
    and sigma^d + p have nonnegative coefficients.
    """
    poly = p.poly if isinstance(p, AreaPolynomial) else p
    if not poly.is_homogeneous():
        raise NotHomogeneous("smallness is defined for homogeneous polynomials")
    d = poly.total_degree()
    bad = []
    for exps, c in poly.sorted_terms():
        if abs(c) > _multinomial(d, exps):
            bad.append(MultiPoly.monomial(poly.vars, exps, 1).canonical_str())
    return not bad, bad


def is_positive(f: MultiPoly) -> tuple[bool, list[str]]:
    """All coefficients nonnegative; returns the offending monomials."""
    bad = [MultiPoly.monomial(f.vars, exps, 1).canonical_str()
           for exps, c in f.sorted_terms() if c < 0]
    return not bad, bad


@dataclass
class PMSplit:
    p_plus: MultiPoly
    p_minus: MultiPoly
    t: MultiPoly
    small_witness: str | None


def split_pm(ap: AreaPolynomial) -> PMSplit:
    """Write p = p_plus - p_minus with no common terms, and make up the
    difference t = (sigma^d - p_plus - p_minus)/2.

    When p is small, t is positive and p_plus + t, p_minus + t reproduce
    the canonical pair; otherwise ``small_witness`` names a violating
    monomial.
    """
    vars = ap.poly.vars
    plus = {e: c for e, c in ap.poly.terms.items() if c > 0}
    minus = {e: -c for e, c in ap.poly.terms.items() if c < 0}
    p_plus = MultiPoly(vars, plus)
    p_minus = MultiPoly(vars, minus)
    t = _halve(_sigma_power(vars, ap.degree) - p_plus - p_minus)
    small, bad = is_small(ap)
    return PMSplit(p_plus, p_minus, t, None if small else bad[0])
