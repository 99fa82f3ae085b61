"""Reduced quotients of multivariate polynomials.

A RatFunc is stored fully normalized: the denominator is a primitive
integer polynomial with positive grevlex leading coefficient, and it is
coprime to the primitive part of the numerator.  Equality is therefore
structural.

Set ``CHECK_REDUCED = True`` (tests do) to re-verify coprimality by an
independent gcd computation after every arithmetic operation.
"""

from __future__ import annotations

from fractions import Fraction

from .gcd import divexact, poly_gcd
from .poly import MultiPoly, _as_fraction

CHECK_REDUCED = False


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = MultiPoly.const(num.vars, 1)
        if not isinstance(num, MultiPoly) or not isinstance(den, MultiPoly):
            raise TypeError("RatFunc expects MultiPoly numerator and denominator")
        if num.vars != den.vars:
            raise ValueError("numerator and denominator must share the variable list")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den
        if CHECK_REDUCED:
            g = poly_gcd(self.num, self.den)
            assert g.is_constant() and g.constant_value() in (0, 1), \
                "rational function not in lowest terms"

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return num, MultiPoly.const(num.vars, 1)
        cn, pn = num.primitive_integer()
        cd, pd = den.primitive_integer()
        g = poly_gcd(pn, pd)
        if not (g.is_constant() and g.constant_value() == 1):
            pn = divexact(pn, g)
            pd = divexact(pd, g)
        _, lead = pd.leading()
        if lead < 0:
            pn, pd = -pn, -pd
        return pn * (cn / cd), pd

    @classmethod
    def const(cls, vars, value):
        return cls(MultiPoly.const(vars, value))

    @classmethod
    def var(cls, vars, name):
        return cls(MultiPoly.var(vars, name))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(self.vars, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        return RatFunc.const(self.vars, _as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        g = poly_gcd(self.den, other.den)
        if g.is_constant():
            num = self.num * other.den + other.num * self.den
            den = self.den * other.den
        else:
            da = divexact(self.den, g)
            db = divexact(other.den, g)
            num = self.num * db + other.num * da
            den = da * other.den
        return RatFunc(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("inverse of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        # Coprime powers stay coprime and primitive powers stay primitive.
        return RatFunc(self.num ** n, self.den ** n, _normalized=True)

    def evaluate(self, values):
        """Exact value at a rational point; raises ZeroDivisionError on the zero locus."""
        d = self.den.evaluate(values)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.evaluate(values) / d

    def canonical_str(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return self.num.canonical_str()
        return f"({self.num.canonical_str()}) / ({self.den.canonical_str()})"

    def __repr__(self):
        return f"RatFunc({self.canonical_str()!r})"
