"""Monsky's coloring machinery instantiated over the 2-adic norm on Q.

Points of the rational plane are colored A, B, or C by comparing the
2-adic norms of their coordinates against 1 (ties broken in that order).
The two coloring lemmas become checkable predicates, and for honest
triangulations drawn over Q the induced Sperner coloring always contains a
rainbow (ABC) triangle whose area has negative 2-adic valuation.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import triangle_area
from .errors import DegenerateFrame
from .model import ConstrainedTriangulation


def two_adic_valuation(x) -> int:
    """v2 of a nonzero rational: v2(num) - v2(den)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("the zero rational has no finite 2-adic valuation")
    n, d = abs(x.numerator), x.denominator
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    while d % 2 == 0:
        d //= 2
        v -= 1
    return v


def two_adic_norm(x) -> Fraction:
    """|x| = 2^(-v2(x)) as an exact rational; |0| = 0."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    v = two_adic_valuation(x)
    return Fraction(1, 2 ** v) if v >= 0 else Fraction(2 ** (-v))


def color(point) -> str:
    """Sperner color of a rational point.

    A when |x| >= |y| and |x| >= 1; else B when |y| >= 1; else C.
    """
    x, y = Fraction(point[0]), Fraction(point[1])
    vx = two_adic_valuation(x) if x else None
    vy = two_adic_valuation(y) if y else None
    x_ge_y = (vy is None) if vx is None else (vy is None or vx <= vy)
    if vx is not None and vx <= 0 and x_ge_y:
        return "A"
    if vy is not None and vy <= 0:
        return "B"
    return "C"


def check_translation_lemma(phi, psi):
    """Color of phi must survive adding a C-colored psi.

    Returns None (not applicable) when psi is not C-colored, else the
    boolean verdict.
    """
    if color(psi) != "C":
        return None
    shifted = (Fraction(phi[0]) + Fraction(psi[0]),
               Fraction(phi[1]) + Fraction(psi[1]))
    return color(phi) == color(shifted)


def check_area_lemma(triangle):
    """A triangle colored A, B, C must have area of norm > 1.

    Returns None when the vertex colors are not {A, B, C}, else whether
    the area's 2-adic valuation is negative.
    """
    if sorted(color(p) for p in triangle) != ["A", "B", "C"]:
        return None
    area = triangle_area(*[(Fraction(p[0]), Fraction(p[1])) for p in triangle])
    if area == 0:
        return False
    return two_adic_valuation(area) < 0


def corner_frame_map(points, corners):
    """The affine map sending the p, q, s corners to (0,0), (1,0), (0,1).

    Returns a callable on rational points.  Raises DegenerateFrame when
    the three corners are collinear.
    """
    p, q, r, s = corners
    op, oq, os = points[p], points[q], points[s]
    a = oq[0] - op[0]
    b = os[0] - op[0]
    c = oq[1] - op[1]
    d = os[1] - op[1]
    det = a * d - b * c
    if det == 0:
        raise DegenerateFrame("corner frame p,q,s is collinear")

    def apply(pt):
        x = pt[0] - op[0]
        y = pt[1] - op[1]
        return ((d * x - b * y) / det, (-c * x + a * y) / det)

    return apply


def normalized_coloring(ct, drawing) -> dict[str, str]:
    """Colors of all vertices after the corner-normalizing affine map."""
    apply = corner_frame_map(drawing.points, ct.corners)
    return {v: color(apply(drawing.points[v])) for v in ct.vertices}


def rainbow_triangles(ct: ConstrainedTriangulation, drawing) -> list[str]:
    """All triangles whose normalized vertex colors are {A, B, C}, in input
    order.  Requires an honest triangulation (the Sperner argument needs
    every 2-cell alive)."""
    if ct.constraints:
        raise ValueError("rainbow search requires an honest triangulation")
    colors = normalized_coloring(ct, drawing)
    out = []
    for t in ct.triangles:
        if sorted(colors[v] for v in t.verts) == ["A", "B", "C"]:
            out.append(t.id)
    return out


def find_rainbow_triangle(ct: ConstrainedTriangulation, drawing) -> str:
    """First rainbow triangle; existence is guaranteed by the Sperner
    coloring (corners normalize to colors C, A, A, B)."""
    hits = rainbow_triangles(ct, drawing)
    if not hits:
        raise AssertionError(
            "no rainbow triangle found; Sperner guarantee violated")
    return hits[0]
