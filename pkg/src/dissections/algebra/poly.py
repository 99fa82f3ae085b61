"""Sparse multivariate polynomials over exact rationals.

Terms live in a dict mapping exponent tuples to nonzero Fractions.  The
variable list is part of the polynomial; binary operations require both
operands to share it (use ``lift`` to move between rings).  Values are
immutable by convention: no method mutates ``terms`` after construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .orders import GREVLEX


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for exps, c in terms.items():
            if len(exps) != n:
                raise ValueError("exponent vector length does not match variable list")
            c = _as_fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, value):
        value = _as_fraction(value)
        if not value:
            return cls.zero(vars)
        return cls(vars, {(0,) * len(tuple(vars)): value})

    @classmethod
    def var(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, vars, exps, coeff=1):
        return cls(vars, {tuple(exps): _as_fraction(coeff)})

    # -- basic structure ----------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        [(exps, c)] = self.terms.items()
        if any(exps):
            raise ValueError("polynomial is not constant")
        return c

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def has_integer_coefficients(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def involves(self, name):
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def leading(self, key=None):
        """Leading (exponents, coefficient) under ``key`` (default grevlex)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = key or GREVLEX.key_function(self.vars)
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self == MultiPoly.const(self.vars, other)
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _as_fraction(other))
        return NotImplemented

    # -- content and normalization --------------------------------------

    def content(self):
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_integer(self):
        """Split into (content, primitive integer-coefficient polynomial)."""
        c = self.content()
        if not c:
            return Fraction(0), self
        return c, self * (1 / c)

    # -- substitution and evaluation -------------------------------------

    def evaluate(self, values):
        """Evaluate at exact rationals; ``values`` maps every variable name."""
        vals = [_as_fraction(values[v]) for v in self.vars]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def subs(self, mapping, result_vars=None):
        """Substitute polynomials or rationals for variables.

        Unmapped variables must exist in the result ring and map to
        themselves.  Returns a MultiPoly over ``result_vars`` (defaults to
        the current variable list, only valid for scalar substitutions).
        """
        result_vars = tuple(result_vars if result_vars is not None else self.vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if not isinstance(img, MultiPoly):
                    img = MultiPoly.const(result_vars, img)
                elif img.vars != result_vars:
                    img = img.lift(result_vars)
            else:
                img = MultiPoly.var(result_vars, v)
            images.append(img)
        out = MultiPoly.zero(result_vars)
        pow_cache = [{} for _ in images]

        def power(i, e):
            cache = pow_cache[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        for exps, c in self.terms.items():
            term = MultiPoly.const(result_vars, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def lift(self, new_vars):
        """Reinterpret over a superset (or reordering) of the variables."""
        new_vars = tuple(new_vars)
        idx = {}
        for v in self.vars:
            if self.involves(v):
                if v not in new_vars:
                    raise ValueError(f"variable {v!r} not present in target ring")
                idx[v] = new_vars.index(v)
        n = len(new_vars)
        out = {}
        positions = [idx.get(v) for v in self.vars]
        for exps, c in self.terms.items():
            new = [0] * n
            for pos, e in zip(positions, exps):
                if e:
                    new[pos] = e
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return MultiPoly(new_vars, out)

    def drop_vars(self, names):
        """Remove variables that do not occur (raises if any of them does)."""
        names = set(names)
        for v in names:
            if v in self.vars and self.involves(v):
                raise ValueError(f"cannot drop occurring variable {v!r}")
        kept = tuple(v for v in self.vars if v not in names)
        return self.lift(kept)

    # -- rendering -------------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lex descending order (the canonical text order)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def canonical_str(self):
        """Canonical text form: graded-lex descending, '*' and '^' explicit."""
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, exps) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, first = pieces[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.canonical_str()!r})"


def ring(*names):
    """Generators of the polynomial ring on ``names`` (in that order)."""
    return tuple(MultiPoly.var(names, v) for v in names)


def triangle_area(p1, p2, p3):
    """Signed area of the ordered triangle; works over any exact coefficient type.

    Computes half the 3x3 determinant with a row of ones over the point
    coordinates, so it is antisymmetric under swapping two points and zero
    exactly when the points are collinear.
    """
    (x1, y1), (x2, y2), (x3, y3) = p1, p2, p3
    det = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
    return det * Fraction(1, 2)
