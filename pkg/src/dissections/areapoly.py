"""The area polynomial: implicitization of the area system by elimination.

The realizable area tuples of a drawable constrained triangulation form a
hypersurface in the projective space on the living triangles (when the
input is "hyper"); this module computes its primitive integer defining
polynomial with a fixed sign convention and verifies the two mandatory
identities (vanishing on the area system, and congruence to sigma^d mod 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, RatFunc, buchberger, eliminate, triangle_area
from .algebra.orders import TermOrder
from .errors import (DrawabilityUndecided, NotDrawable, NotHyper,
                     VerificationFailed)
from .model import ConstrainedTriangulation, living_triangles
from .order import find_drawing_order
from .param import area_system, build_parameterization, sample_generic_drawing


@dataclass
class AreaPolynomial:
    """Primitive integer homogeneous polynomial vanishing on the area variety.

    The sign is pinned by a positive coefficient on the pure power of the
    first living triangle (that coefficient is odd, hence nonzero, by the
    mod-2 congruence).
    """

    poly: MultiPoly
    degree: int
    sign_witness: str

    @property
    def living(self):
        return self.poly.vars

    def sigma(self):
        out = MultiPoly.zero(self.poly.vars)
        for v in self.poly.vars:
            out = out + MultiPoly.var(self.poly.vars, v)
        return out

    def canonical_str(self):
        return self.poly.canonical_str()


def _fresh_name(base, taken):
    name = base
    while name in taken:
        name += "_"
    return name


def _substitute_rationals(poly, values):
    """Evaluate a polynomial at rational functions, with power caching."""
    some = next(iter(values.values()))
    ring = some.vars
    out = RatFunc.const(ring, 0)
    cache = {v: {} for v in poly.vars}

    def power(v, e):
        c = cache[v]
        if e not in c:
            c[e] = values[v] ** e
        return c[e]

    for exps, coeff in poly.terms.items():
        term = RatFunc.const(ring, coeff)
        for v, e in zip(poly.vars, exps):
            if e:
                term = term * power(v, e)
        out = out + term
    return out


def area_polynomial(ct: ConstrainedTriangulation, order=None,
                    term_order="grevlex", presample_seed=0) -> AreaPolynomial:
    """Compute the area polynomial of a drawable constrained triangulation.

    Pipeline: fixed-corner parameterization; ideal generated by
    A_j*D_j - N_j for the reduced areas N_j/D_j plus a Rabinowitsch
    variable inverting the product of the distinct denominators; eliminate
    parameters and the Rabinowitsch variable; dehomogenize onto the
    sigma = 1 chart by substituting the last living variable; demand a
    principal ideal there; re-homogenize its generator with sigma and
    normalize.  Raises NotDrawable / NotHyper / VerificationFailed.
    """
    living = living_triangles(ct)
    if not living:
        raise NotDrawable("no living triangles")
    try:
        sample_generic_drawing(ct, seed=presample_seed)
    except DrawabilityUndecided as e:
        raise NotDrawable(f"sampling found no generic drawing: {e}") from e
    order = order or find_drawing_order(ct)
    par = build_parameterization(ct, order, fixed_corners=True)
    system = area_system(ct, par)

    params = list(par.parameter_names)
    taken = set(living) | set(params)
    t_name = _fresh_name("t", taken)
    ring_vars = tuple(living) + tuple(params) + (t_name,)

    def lift(p):
        return p.lift(ring_vars)

    gens = []
    distinct_dens = []
    for tid in living:
        rf = system.areas[tid]
        a = MultiPoly.var(ring_vars, tid)
        gens.append(a * lift(rf.den) - lift(rf.num))
        if not rf.den.is_constant() and rf.den not in distinct_dens:
            distinct_dens.append(rf.den)
    if distinct_dens:
        prod = MultiPoly.const(ring_vars, 1)
        for den in distinct_dens:
            prod = prod * lift(den)
        gens.append(MultiPoly.var(ring_vars, t_name) * prod - 1)

    elim = eliminate(gens, params + [t_name], inner=term_order)

    # Dehomogenize onto sigma = 1: substitute the last living variable.
    last = living[-1]
    kept = tuple(living[:-1])
    if not kept:
        raise NotHyper("a single living triangle has no projective relation")
    ones = MultiPoly.const(kept, 1)
    subbed = ones - sum(
        (MultiPoly.var(kept, v) for v in kept), MultiPoly.zero(kept))
    reduced = [g.subs({last: subbed}, result_vars=kept) for g in elim]
    reduced = [g for g in reduced if not g.is_zero()]
    basis = buchberger(reduced, TermOrder(term_order))
    if len(basis) != 1:
        raise NotHyper(
            f"dehomogenized area ideal has a {len(basis)}-element reduced basis")
    q_tilde = basis[0]
    if q_tilde.is_constant():
        raise NotHyper("dehomogenized area ideal is the unit ideal")

    d = q_tilde.total_degree()
    full = tuple(living)
    sigma = MultiPoly.zero(full)
    for v in full:
        sigma = sigma + MultiPoly.var(full, v)
    p = MultiPoly.zero(full)
    for exps, coeff in q_tilde.terms.items():
        mono = MultiPoly.monomial(full, tuple(exps) + (0,), coeff)
        p = p + mono * sigma ** (d - sum(exps))
    _, p = p.primitive_integer()

    lead_exps = tuple(d if v == living[0] else 0 for v in full)
    lead = p.coefficient(lead_exps)
    if lead == 0:
        raise VerificationFailed(
            f"coefficient of {living[0]}^{d} vanishes; sign convention undefined")
    if lead < 0:
        p = -p

    # Mandatory verification: p vanishes on the area system ...
    value = _substitute_rationals(p, system.areas)
    if not value.is_zero():
        raise VerificationFailed("area polynomial does not annihilate the areas")
    # ... and p is congruent to sigma^d mod 2.
    diff = p - sigma ** d
    if any(c.denominator != 1 or c.numerator % 2 for c in diff.terms.values()):
        raise VerificationFailed("area polynomial is not sigma^d mod 2")

    witness = living[0] if d == 1 else f"{living[0]}^{d}"
    return AreaPolynomial(p, d, witness)


def verify_vanishing(ap: AreaPolynomial, ct, num_samples=20, seed=0) -> bool:
    """Evaluate p at the exact areas of sampled generic drawings."""
    for i in range(num_samples):
        drawing = sample_generic_drawing(ct, seed=seed + i)
        areas = {}
        for tid in ap.living:
            tri = ct.triangle_by_id[tid]
            areas[tid] = triangle_area(*(drawing.points[v] for v in tri.verts))
        if ap.poly.evaluate(areas) != 0:
            return False
    return True


@dataclass
class Obstruction:
    p_at_ones: Fraction
    deformable_to_equal_areas: bool


def equidissection_obstruction(ap: AreaPolynomial) -> Obstruction:
    """Evaluate p at (1,...,1); a nonzero value obstructs deforming to an
    equidissection.  Zero only means "not obstructed by p"."""
    value = ap.poly.evaluate({v: 1 for v in ap.living})
    return Obstruction(value, value == 0)
