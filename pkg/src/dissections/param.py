"""Rational parameterization of the drawing space, area systems, drawing
evaluation/classification, and generic sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, RatFunc, triangle_area
from .errors import (DenominatorVanishes, DrawabilityUndecided,
                     IdenticallyParallel, NotDrawingOrder, Reducible)
from .model import ConstrainedTriangulation, living_triangles
from .order import DrawingOrder, find_drawing_order


@dataclass
class Parameterization:
    """Per-vertex coordinate pairs of reduced rational functions.

    Corner coordinates are either free parameters (with the fourth corner
    pinned to the parallelogram identity) or the unit square.  Interior
    vertices consume 2, 1, or 0 fresh parameters according to their alpha:
    two free coordinates, an affine slide along the relevant constraint's
    anchor points, or the intersection of the two relevant anchor lines.
    """

    ct: ConstrainedTriangulation
    order: DrawingOrder
    fixed_corners: bool
    parameter_names: tuple[str, ...]
    blocks: dict[str, tuple[str, ...]]
    coords: dict[str, tuple[RatFunc, RatFunc]]
    denominators: list[MultiPoly]

    def parallelogram_defect(self):
        p, q, r, s = self.ct.corners
        cp, cq, cr, cs = (self.coords[v] for v in (p, q, r, s))
        return (cp[0] + cr[0] - cq[0] - cs[0], cp[1] + cr[1] - cq[1] - cs[1])

    def constraint_defects(self):
        """One list per constraint: the collinearity determinants that must
        vanish identically."""
        out = []
        for c in self.ct.constraints:
            verts = sorted(c.vertices, key=self.order.sequence.index)
            a, b = verts[0], verts[1]
            defects = [
                triangle_area(self.coords[a], self.coords[b], self.coords[w])
                for w in verts[2:]
            ]
            out.append(defects)
        return out


@dataclass
class DrawingFlags:
    is_drawing: bool
    is_generic: bool
    is_life_preserving: bool


@dataclass
class Drawing:
    points: dict[str, tuple[Fraction, Fraction]]
    flags: DrawingFlags


@dataclass
class AreaSystem:
    """Area rational functions of the living triangles, plus their sum."""

    living: tuple[str, ...]
    areas: dict[str, RatFunc]
    sigma: RatFunc


def _line_intersection(a, b, c, d, vertex):
    """Intersection of line(a,b) with line(c,d) by Cramer's rule.

    Raises IdenticallyParallel when the direction cross product is the zero
    rational function.
    """
    denom = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
    if denom.is_zero():
        raise IdenticallyParallel(vertex)
    t = ((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / denom
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def build_parameterization(ct, order=None, fixed_corners=True) -> Parameterization:
    """The rational map from the free parameters onto the drawing space.

    With ``fixed_corners`` the corners are pinned to the unit square and
    interior parameters are named w1, w2, ...; otherwise the corners
    contribute six coordinate parameters (x/y per free corner) and the
    fourth corner is their parallelogram combination.
    """
    order = order or find_drawing_order(ct)
    p, q, r, s = ct.corners
    names = []
    blocks = {}
    if not fixed_corners:
        for corner in (p, q, s):
            blocks[corner] = (f"x{corner}", f"y{corner}")
            names.extend(blocks[corner])
        blocks[r] = ()
    else:
        for corner in (p, q, s, r):
            blocks[corner] = ()
    counter = 0
    for v in order.sequence[4:]:
        k = order.alpha[v]
        block = tuple(f"w{counter + i + 1}" for i in range(k))
        counter += k
        blocks[v] = block
        names.extend(block)
    names = tuple(names)

    def const(x):
        return RatFunc.const(names, x)

    def var(n):
        return RatFunc.var(names, n)

    coords = {}
    if fixed_corners:
        coords[p] = (const(0), const(0))
        coords[q] = (const(1), const(0))
        coords[r] = (const(1), const(1))
        coords[s] = (const(0), const(1))
    else:
        coords[p] = (var(f"x{p}"), var(f"y{p}"))
        coords[q] = (var(f"x{q}"), var(f"y{q}"))
        coords[s] = (var(f"x{s}"), var(f"y{s}"))
        coords[r] = (coords[q][0] + coords[s][0] - coords[p][0],
                     coords[q][1] + coords[s][1] - coords[p][1])

    for v in order.sequence[4:]:
        a = order.alpha[v]
        if a == 2:
            w1, w2 = blocks[v]
            coords[v] = (var(w1), var(w2))
        elif a == 1:
            (constraint, (y, z)), = order.relevant[v]
            t = var(blocks[v][0])
            gy, gz = coords[y], coords[z]
            coords[v] = (t * gy[0] + (1 - t) * gz[0],
                         t * gy[1] + (1 - t) * gz[1])
        else:
            (c1, (y1, z1)), (c2, (y2, z2)) = order.relevant[v]
            coords[v] = _line_intersection(
                coords[y1], coords[z1], coords[y2], coords[z2], v)

    denominators = []
    for v in order.sequence:
        for rf in coords[v]:
            den = rf.den
            if not den.is_constant() and den not in denominators:
                denominators.append(den)
    return Parameterization(ct, order, fixed_corners, names, blocks,
                            coords, denominators)


def area_system(ct, par: Parameterization) -> AreaSystem:
    """Signed areas of the living triangles as rational functions."""
    living = tuple(living_triangles(ct))
    areas = {}
    for tid in living:
        tri = ct.triangle_by_id[tid]
        areas[tid] = triangle_area(*(par.coords[v] for v in tri.verts))
    sigma = RatFunc.const(par.parameter_names, 0)
    for tid in living:
        sigma = sigma + areas[tid]
    return AreaSystem(living, areas, sigma)


def check_drawing(ct, points) -> DrawingFlags:
    """Classify a vertex placement against the drawing conditions.

    is_drawing: constraints collinear (1) and corners a parallelogram (2);
    is_life_preserving adds a nondegenerate corner 4-gon (3) and
    nondegenerate living triangles (4); is_generic adds injectivity (5)
    and distinct lines for intersecting constraints (6).
    """
    p, q, r, s = ct.corners
    collinear_ok = True
    for c in ct.constraints:
        pts = [points[v] for v in sorted(c.vertices)]
        anchor = next(((a, b) for a in pts for b in pts if a != b), None)
        if anchor is None:
            continue
        a, b = anchor
        if any(triangle_area(a, b, w) != 0 for w in pts):
            collinear_ok = False
            break
    pp, pq, pr, ps = points[p], points[q], points[r], points[s]
    parallelogram = (pp[0] + pr[0] == pq[0] + ps[0]
                     and pp[1] + pr[1] == pq[1] + ps[1])
    is_drawing = collinear_ok and parallelogram

    corner_ok = triangle_area(pp, pq, ps) != 0
    living_ok = all(
        triangle_area(*(points[v] for v in ct.triangle_by_id[t].verts)) != 0
        for t in living_triangles(ct)
    )
    life = is_drawing and corner_ok and living_ok

    seen = set()
    injective = True
    for v in ct.vertices:
        if points[v] in seen:
            injective = False
            break
        seen.add(points[v])

    lines_ok = True
    if injective:
        def line_of(c):
            pts = [points[v] for v in sorted(c.vertices)]
            for a in pts:
                for b in pts:
                    if a != b:
                        return a, b
            return None
        cs = ct.constraints
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if not (cs[i].vertices & cs[j].vertices):
                    continue
                la, lb = line_of(cs[i])
                ma, mb = line_of(cs[j])
                if (triangle_area(la, lb, ma) == 0
                        and triangle_area(la, lb, mb) == 0):
                    lines_ok = False
    generic = life and injective and lines_ok
    return DrawingFlags(is_drawing, generic, life)


def evaluate_drawing(par: Parameterization, values) -> Drawing:
    """Exact drawing at the given parameter values.

    ``values`` maps parameter names to rationals (or lists them in order).
    Raises DenominatorVanishes naming the first failing vertex.
    """
    if not isinstance(values, dict):
        values = dict(zip(par.parameter_names, values))
    vals = {k: Fraction(v) for k, v in values.items()}
    missing = set(par.parameter_names) - set(vals)
    if missing:
        raise ValueError(f"missing parameter values for {sorted(missing)}")
    points = {}
    for v in par.order.sequence:
        xy = []
        for rf in par.coords[v]:
            if rf.den.evaluate(vals) == 0:
                raise DenominatorVanishes(v)
            xy.append(rf.evaluate(vals))
        points[v] = (xy[0], xy[1])
    return Drawing(points, check_drawing(par.ct, points))


def recover_parameters(par: Parameterization, drawing: Drawing) -> dict[str, Fraction]:
    """Invert the parameterization at a generic drawing.

    Free-coordinate parameters are read off, affine weights solved from the
    anchor points, and intersection vertices contribute nothing.  The
    recovered values re-evaluate to the identical drawing.
    """
    points = drawing.points
    values = {}
    p, q, r, s = par.ct.corners
    if not par.fixed_corners:
        for corner in (p, q, s):
            nx, ny = par.blocks[corner]
            values[nx], values[ny] = points[corner]
    for v in par.order.sequence[4:]:
        a = par.order.alpha[v]
        if a == 2:
            nx, ny = par.blocks[v]
            values[nx], values[ny] = points[v]
        elif a == 1:
            (constraint, (y, z)), = par.order.relevant[v]
            py, pz, pv = points[y], points[z], points[v]
            if py == pz:
                raise ValueError(
                    f"anchors of {v} coincide; drawing is not generic")
            if py[0] != pz[0]:
                t = (pv[0] - pz[0]) / (py[0] - pz[0])
            else:
                t = (pv[1] - pz[1]) / (py[1] - pz[1])
            values[par.blocks[v][0]] = t
    return values


def sample_generic_drawing(ct, seed=0, max_attempts=1000) -> Drawing:
    """Search a rational grid for a generic drawing (fixed corners).

    Deterministic per seed.  Parameter values have numerators in [-N, N]
    (N starts at 8 and doubles every 250 failures) and denominators 2^k,
    k <= 4.  Raises DrawabilityUndecided after ``max_attempts`` failures;
    that is a heuristic outcome, not a proof of non-drawability.
    """
    try:
        order = find_drawing_order(ct)
        par = build_parameterization(ct, order, fixed_corners=True)
    except (Reducible, NotDrawingOrder, IdenticallyParallel) as e:
        raise DrawabilityUndecided(
            f"no usable drawing order / parameterization: {e}") from e
    if not par.parameter_names:
        points = {v: tuple(c.evaluate({}) for c in par.coords[v])
                  for v in order.sequence}
        drawing = Drawing(points, check_drawing(ct, points))
        if drawing.flags.is_generic:
            return drawing
        raise DrawabilityUndecided("the unique drawing is not generic")
    rng = random.Random(seed)
    n_bound = 8
    for attempt in range(max_attempts):
        if attempt and attempt % 250 == 0:
            n_bound *= 2
        values = {
            name: Fraction(rng.randint(-n_bound, n_bound), 2 ** rng.randint(0, 4))
            for name in par.parameter_names
        }
        try:
            drawing = evaluate_drawing(par, values)
        except DenominatorVanishes:
            continue
        if drawing.flags.is_generic:
            return drawing
    raise DrawabilityUndecided(
        f"no generic drawing found in {max_attempts} attempts")
