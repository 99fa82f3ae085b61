"""Multivariate polynomial gcd and exact division over the rationals.

The gcd uses content/primitive-part recursion on the least variable with a
primitive pseudo-remainder sequence.  Everything here returns primitive
integer polynomials with a positive leading coefficient under grevlex.
"""

from __future__ import annotations

from fractions import Fraction

from .orders import GREVLEX
from .poly import MultiPoly


class ExactDivisionError(ArithmeticError):
    pass


def _positive_primitive(p):
    """Primitive integer form with positive grevlex leading coefficient."""
    if p.is_zero():
        return p
    c, prim = p.primitive_integer()
    _, lead = prim.leading()
    if lead < 0:
        prim = -prim
    return prim


def divexact(f, g):
    """Quotient f/g when the division is exact; raises ExactDivisionError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero():
        return f
    key = GREVLEX.key_function(f.vars)
    g_exps, g_coeff = g.leading(key)
    quotient = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=key)
        coeff = work[exps]
        q_exps = tuple(a - b for a, b in zip(exps, g_exps))
        if any(e < 0 for e in q_exps):
            raise ExactDivisionError("division is not exact")
        q_coeff = coeff / g_coeff
        quotient[q_exps] = q_coeff
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(q_exps, e2))
            s = work.get(e, Fraction(0)) - q_coeff * c2
            if s:
                work[e] = s
            elif e in work:
                del work[e]
    return MultiPoly(f.vars, quotient)


def _degree_in(terms, i):
    return max((e[i] for e in terms), default=-1)


def _split_by_var(p, i):
    """View p as a univariate polynomial in variable i: degree -> coefficient poly."""
    slices = {}
    for exps, c in p.terms.items():
        d = exps[i]
        rest = exps[:i] + (0,) + exps[i + 1:]
        slc = slices.setdefault(d, {})
        slc[rest] = slc.get(rest, 0) + c
    return {d: MultiPoly(p.vars, t) for d, t in slices.items()}


def _join_by_var(vars, slices, i):
    terms = {}
    for d, poly in slices.items():
        for exps, c in poly.terms.items():
            e = exps[:i] + (d,) + exps[i + 1:]
            terms[e] = c
    return MultiPoly(vars, terms)


def _content_wrt(p, i):
    """(content, primitive part) of p as a univariate polynomial in variable i."""
    slices = _split_by_var(p, i)
    coeffs = list(slices.values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = poly_gcd(cont, c)
        if cont.is_constant():
            break
    cont = _positive_primitive(cont)
    if cont.is_constant() and cont.constant_value() == 1:
        return cont, p
    prim = _join_by_var(p.vars, {d: divexact(c, cont) for d, c in slices.items()}, i)
    return cont, prim


def _pseudo_rem(f, g, i):
    """Pseudo-remainder of f by g in variable i (f scaled by powers of lc(g))."""
    dg = _degree_in(g.terms, i)
    g_slices = _split_by_var(g, i)
    lcg = g_slices[dg]
    xi = MultiPoly.var(f.vars, f.vars[i])
    while not f.is_zero():
        df = _degree_in(f.terms, i)
        if df < dg:
            break
        lcf = _split_by_var(f, i)[df]
        f = f * lcg - g * lcf * xi ** (df - dg)
    return f


def poly_gcd(f, g):
    """Gcd of two polynomials: primitive integer, positive leading coefficient.

    gcd(0, g) = |g| normalized; gcd of constants is the integer gcd of the
    primitive contents.
    """
    if f.vars != g.vars:
        raise ValueError("gcd operands must share the variable list")
    if f.is_zero():
        return _positive_primitive(g)
    if g.is_zero():
        return _positive_primitive(f)
    f = _positive_primitive(f)
    g = _positive_primitive(g)
    # Primitive constants are 1, and a divisor only involves shared variables.
    if f.is_constant() or g.is_constant():
        return MultiPoly.const(f.vars, 1)
    common = [i for i in range(len(f.vars))
              if any(e[i] for e in f.terms) and any(e[i] for e in g.terms)]
    if not common:
        return MultiPoly.const(f.vars, 1)
    i = max(common)  # least variable under precedence = last in the list
    cf, pf = _content_wrt(f, i)
    cg, pg = _content_wrt(g, i)
    c = poly_gcd(cf, cg)
    while not pg.is_zero():
        r = _pseudo_rem(pf, pg, i)
        pf = pg
        if r.is_zero():
            pg = r
        else:
            _, pg = _content_wrt(_positive_primitive(r), i)
    return _positive_primitive(c * pf)
