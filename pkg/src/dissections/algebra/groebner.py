"""Buchberger's algorithm with sugar selection and the two classical criteria.

The kernel works on integer-coefficient term dicts (exponent tuple -> int)
and keeps every polynomial primitive, so no Fraction arithmetic happens in
the inner loops.  Output bases are reduced: pairwise fully reduced, each
member primitive with positive leading coefficient, sorted by decreasing
leading term.  A reduced basis in this normalization is canonical for the
ideal and the order.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as int_gcd

from .orders import GREVLEX, TermOrder
from .poly import MultiPoly


def _int_terms(p):
    """Primitive integer term dict of a MultiPoly (None if zero)."""
    if p.is_zero():
        return None
    _, prim = p.primitive_integer()
    return {e: int(c) for e, c in prim.terms.items()}


def _content_normalize(terms):
    g = 0
    for c in terms.values():
        g = int_gcd(g, c)
        if g == 1:
            return terms
    if g > 1:
        return {e: c // g for e, c in terms.items()}
    return terms


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sub_scaled(f, scale_f, g, scale_g, shift):
    """Return scale_f*f - scale_g*x^shift*g as a fresh dict."""
    out = {e: scale_f * c for e, c in f.items()} if scale_f != 1 else dict(f)
    for e, c in g.items():
        k = tuple(a + b for a, b in zip(e, shift))
        s = out.get(k, 0) - scale_g * c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


class _Reducer:
    """Shared reduction helper bound to one key function."""

    def __init__(self, key):
        self.key = key

    def normal_form(self, f, basis, active, track_sugar=None):
        """Fully reduce dict f against the active basis members.

        ``basis`` is a list of (terms, lt, lc) triples; ``active`` an index
        list.  Returns a primitive dict (possibly empty).  If
        ``track_sugar`` is a one-element list its entry is updated with the
        sugar degree accumulated during reduction.
        """
        key = self.key
        f = dict(f)
        done = set()
        while True:
            candidates = [e for e in f if e not in done]
            if not candidates:
                break
            lt = max(candidates, key=key)
            hit = None
            for i in active:
                terms_i, lt_i, lc_i = basis[i]
                if _divides(lt_i, lt):
                    hit = (terms_i, lt_i, lc_i, i)
                    break
            if hit is None:
                done.add(lt)
                continue
            terms_i, lt_i, lc_i, i = hit
            c = f[lt]
            g0 = int_gcd(c, lc_i)
            a, b = lc_i // g0, c // g0
            if a < 0:
                a, b = -a, -b
            shift = tuple(x - y for x, y in zip(lt, lt_i))
            f = _sub_scaled(f, a, terms_i, b, shift)
            if track_sugar is not None:
                track_sugar[0] = max(track_sugar[0],
                                     self.sugars[i] + sum(shift))
        return _content_normalize(f) if f else f


def _groebner_int(gens, key):
    """Reduced Groebner basis of integer term dicts under the key function."""
    reducer = _Reducer(key)
    basis = []      # (terms, lt exps, lt coeff)
    sugars = []
    reducer.sugars = sugars

    def add_poly(terms, sugar):
        lt = max(terms, key=key)
        basis.append((terms, lt, terms[lt]))
        sugars.append(sugar)
        return len(basis) - 1

    seeds = [g for g in gens if g]
    if not seeds:
        return []
    pairs = []      # heap of (sugar, lcm key, i, j)
    treated = set()

    def push_pairs(m):
        terms_m, lt_m, _ = basis[m]
        for i in range(m):
            lt_i = basis[i][1]
            lcm = tuple(max(a, b) for a, b in zip(lt_i, lt_m))
            sugar = max(sugars[i] + sum(lcm) - sum(lt_i),
                        sugars[m] + sum(lcm) - sum(lt_m))
            heapq.heappush(pairs, (sugar, key(lcm), i, m))

    for g in seeds:
        add_poly(_content_normalize(dict(g)), max(sum(e) for e in g))
        push_pairs(len(basis) - 1)

    while pairs:
        sugar, _, i, j = heapq.heappop(pairs)
        lt_i, lc_i = basis[i][1], basis[i][2]
        lt_j, lc_j = basis[j][1], basis[j][2]
        lcm = tuple(max(a, b) for a, b in zip(lt_i, lt_j))
        treated.add((i, j))
        # Buchberger 1: coprime leading terms resolve trivially.
        if all(a + b == m for a, b, m in zip(lt_i, lt_j, lcm)):
            continue
        # Buchberger 2 (chain): a third member divides the lcm and both
        # side pairs were already handled.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k][1], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in treated and pjk in treated:
                    skip = True
                    break
        if skip:
            continue
        g0 = int_gcd(lc_i, lc_j)
        shift_i = tuple(a - b for a, b in zip(lcm, lt_i))
        shift_j = tuple(a - b for a, b in zip(lcm, lt_j))
        spoly = _sub_scaled(
            {tuple(a + b for a, b in zip(e, shift_i)): c for e, c in basis[i][0].items()},
            lc_j // g0, basis[j][0], lc_i // g0, shift_j)
        if not spoly:
            continue
        track = [sugar]
        h = reducer.normal_form(spoly, basis, range(len(basis)), track_sugar=track)
        if h:
            m = add_poly(h, track[0])
            push_pairs(m)

    # Minimalize: drop members whose leading term another one divides.
    order_idx = sorted(range(len(basis)), key=lambda i: key(basis[i][1]))
    kept = []
    for i in order_idx:
        lt_i = basis[i][1]
        if any(_divides(basis[k][1], lt_i) for k in kept):
            continue
        kept.append(i)
    # Interreduce tails for the canonical reduced basis.
    final = []
    for pos, i in enumerate(kept):
        others = [k for k in kept if k != i]
        terms = reducer.normal_form(dict(basis[i][0]), basis, others)
        lt = max(terms, key=key)
        if terms[lt] < 0:
            terms = {e: -c for e, c in terms.items()}
        final.append(terms)
        basis[i] = (terms, lt, terms[lt])
    final.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    return final


def buchberger(generators, order=None):
    """Reduced Groebner basis of MultiPoly generators under ``order``.

    Members come back primitive over the integers with positive leading
    coefficients, sorted by decreasing leading term.
    """
    generators = list(generators)
    if not generators:
        return []
    vars = generators[0].vars
    for g in generators:
        if g.vars != vars:
            raise ValueError("generators must share one variable list")
    order = order or GREVLEX
    key = order.key_function(vars)
    ints = [t for t in (_int_terms(g) for g in generators) if t]
    result = _groebner_int(ints, key)
    return [MultiPoly(vars, {e: Fraction(c) for e, c in t.items()}) for t in result]


def eliminate(generators, drop_vars, inner="grevlex"):
    """Generators of the elimination ideal with ``drop_vars`` removed.

    Computes a Groebner basis under the block order (dropped variables
    greatest) and returns the members free of them, rebased onto the kept
    variables.  Those members generate the intersection of the ideal with
    the subring on the kept variables.
    """
    generators = list(generators)
    if not generators:
        return []
    vars = generators[0].vars
    drop = [v for v in vars if v in set(drop_vars)]
    unknown = set(drop_vars) - set(vars)
    if unknown:
        raise ValueError(f"cannot eliminate unknown variables {sorted(unknown)}")
    order = TermOrder.elimination(drop, inner=inner)
    basis = buchberger(generators, order)
    kept = [g for g in basis if not any(g.involves(v) for v in drop)]
    return [g.drop_vars(drop) for g in kept]


def poly_divmod(f, g, order=None):
    """Multivariate division by a single divisor: f = q*g + r.

    No monomial of r is divisible by the leading term of g; for a single
    divisor this normal form is unique, so r == 0 iff g divides f.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    order = order or GREVLEX
    key = order.key_function(f.vars)
    g_exps, g_coeff = g.leading(key)
    quotient = {}
    remainder = {}
    work = dict(f.terms)
    while work:
        exps = max(work, key=key)
        coeff = work.pop(exps)
        delta = tuple(a - b for a, b in zip(exps, g_exps))
        if any(e < 0 for e in delta):
            remainder[exps] = coeff
            continue
        q = coeff / g_coeff
        quotient[delta] = quotient.get(delta, 0) + q
        for e2, c2 in g.terms.items():
            if e2 == g_exps:
                continue
            e = tuple(a + b for a, b in zip(delta, e2))
            s = work.get(e, Fraction(0)) - q * c2
            if s:
                work[e] = s
            elif e in work:
                del work[e]
    return MultiPoly(f.vars, quotient), MultiPoly(f.vars, remainder)


def reduce_by_basis(f, basis, order=None):
    """Full normal form of f against a list of polynomials."""
    order = order or GREVLEX
    key = order.key_function(f.vars)
    ints = [_int_terms(g) for g in basis]
    triples = []
    for t in ints:
        if t:
            lt = max(t, key=key)
            triples.append((t, lt, t[lt]))
    if not triples:
        return f
    reducer = _Reducer(key)
    reducer.sugars = [0] * len(triples)
    ft = _int_terms(f)
    if not ft:
        return MultiPoly.zero(f.vars)
    out = reducer.normal_form(ft, triples, range(len(triples)))
    return MultiPoly(f.vars, {e: Fraction(c) for e, c in out.items()})
