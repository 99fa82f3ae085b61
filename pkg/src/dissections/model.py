"""Combinatorial model: oriented triangulated disks with collinearity constraints,
plus the two conversions between classical dissections, generalized dissections,
and constrained triangulations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebra import triangle_area
from .errors import NotADissection


@dataclass(frozen=True)
class OrientedTriangle:
    """A labeled 2-cell; the vertex triple matters up to cyclic rotation only."""

    id: str
    verts: tuple[str, str, str]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        if len(self.verts) != 3:
            raise ValueError(f"triangle {self.id!r} needs exactly three vertices")

    def directed_edges(self):
        a, b, c = self.verts
        return ((a, b), (b, c), (c, a))

    def same_cycle(self, other_verts):
        v = tuple(other_verts)
        return any(self.verts == v[i:] + v[:i] for i in range(3))


@dataclass(frozen=True)
class Constraint:
    """A dead set of triangles together with its derived vertex set."""

    triangles: frozenset[str]
    vertices: frozenset[str]


class ConstrainedTriangulation:
    """Oriented simplicial disk with four corners and disjoint dead triangle sets.

    ``constraints`` is given as an iterable of triangle-id collections; the
    vertex sets are derived.  Construction never validates beyond basic
    referential integrity -- run :func:`validate_ct` for the full check.
    """

    def __init__(self, vertices, corners, triangles, constraints=()):
        self.vertices = tuple(vertices)
        self.corners = tuple(corners)
        if len(self.corners) != 4:
            raise ValueError("exactly four corners required")
        self.triangles = tuple(
            t if isinstance(t, OrientedTriangle) else OrientedTriangle(*t)
            for t in triangles
        )
        self.triangle_by_id = {t.id: t for t in self.triangles}
        if len(self.triangle_by_id) != len(self.triangles):
            raise ValueError("duplicate triangle id")
        built = []
        for tset in constraints:
            tset = frozenset(tset)
            missing = [t for t in tset if t not in self.triangle_by_id]
            if missing:
                raise ValueError(f"constraint references unknown triangles {missing}")
            vset = frozenset(
                v for tid in tset for v in self.triangle_by_id[tid].verts
            )
            built.append(Constraint(tset, vset))
        self.constraints = tuple(built)

    def interior_vertices(self):
        corner = set(self.corners)
        return [v for v in self.vertices if v not in corner]

    def undirected_edges(self):
        seen = set()
        for t in self.triangles:
            for a, b in t.directed_edges():
                seen.add(frozenset((a, b)))
        return seen

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for e in self.undirected_edges():
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def honest(self):
        return not self.constraints

    def __repr__(self):
        return (f"ConstrainedTriangulation({len(self.vertices)} vertices, "
                f"{len(self.triangles)} triangles, {len(self.constraints)} constraints)")


@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


def _disk_violations(cells, corners, vertices):
    """Check that polygonal cells glue into an oriented disk with the given
    4-corner boundary.  Returns a list of violation strings.

    The constructive stand-in for "homeomorphic to a disk": every directed
    edge occurs at most once (global orientation), interior edges are paired
    with their reverses, boundary edges form one cycle visiting exactly the
    corners in their cyclic order, Euler characteristic is 1, vertex links
    are single fans, and the cell complex is connected.
    """
    out = []
    directed = {}
    for name, cycle in cells:
        m = len(cycle)
        if len(set(cycle)) != m:
            out.append(f"orientation mismatch: cell {name} repeats a vertex")
            return out
        for i in range(m):
            e = (cycle[i], cycle[(i + 1) % m])
            if e in directed:
                out.append(
                    "orientation mismatch: directed edge "
                    f"{e[0]}->{e[1]} shared by cells {directed[e]} and {name}")
            directed[e] = name
    if out:
        return out

    boundary = {e: c for e, c in directed.items() if (e[1], e[0]) not in directed}
    undirected = {frozenset(e) for e in directed}

    # Euler characteristic of the complex must be that of a disk.
    used_vertices = {v for _, cycle in cells for v in cycle}
    if set(vertices) != used_vertices:
        missing = set(vertices) - used_vertices
        out.append(f"non-disk: isolated vertices {sorted(missing)}")
    euler = len(used_vertices) - len(undirected) + len(cells)
    if euler != 1:
        out.append(f"non-disk: Euler characteristic {euler} != 1")

    # Single boundary cycle through exactly the corners, in cyclic order.
    succ = {}
    for a, b in boundary:
        if a in succ:
            out.append(f"non-disk: boundary branches at {a}")
            return out
        succ[a] = b
    if not boundary:
        out.append("non-disk: no boundary (closed surface)")
        return out
    start = corners[0]
    if start not in succ:
        out.append("corners not on boundary: first corner missing from boundary")
        return out
    cycle = [start]
    v = succ[start]
    while v != start:
        cycle.append(v)
        if v not in succ or len(cycle) > len(boundary):
            out.append("non-disk: boundary is not a single cycle")
            return out
        v = succ[v]
    if len(cycle) != len(boundary):
        out.append("non-disk: multiple boundary cycles")
    if sorted(cycle) != sorted(set(cycle)):
        out.append("non-disk: boundary revisits a vertex")
    expected = list(corners)
    if set(cycle) != set(expected) or len(cycle) != 4:
        out.append(f"corners not on boundary: boundary cycle is {cycle}")
    else:
        k = cycle.index(expected[0])
        rotated = cycle[k:] + cycle[:k]
        if rotated != expected:
            out.append(
                f"corners not on boundary: cyclic order {rotated} != {expected}")

    # Vertex links must be single fans (cone points and pinches are not).
    link_edges = {v: [] for v in used_vertices}
    for name, cycle_ in cells:
        m = len(cycle_)
        for i, v in enumerate(cycle_):
            link_edges[v].append((cycle_[(i - 1) % m], cycle_[(i + 1) % m]))
    for v, arcs in link_edges.items():
        nxt = {a: b for a, b in arcs}
        if len(nxt) != len(arcs):
            out.append(f"non-disk: pinched link at vertex {v}")
            continue
        starts = [a for a, _ in arcs if a not in {b for _, b in arcs}]
        if len(starts) > 1:
            out.append(f"non-disk: disconnected link at vertex {v}")
            continue
        cur = starts[0] if starts else arcs[0][0]
        seen = 0
        while seen < len(arcs) and cur in nxt:
            cur = nxt.pop(cur)
            seen += 1
        if nxt:
            out.append(f"non-disk: disconnected link at vertex {v}")

    # Connectivity across cells through shared edges.
    if len(cells) > 1:
        cell_of_edge = {}
        neighbors = {name: set() for name, _ in cells}
        for e, name in directed.items():
            rev = (e[1], e[0])
            if rev in directed:
                neighbors[name].add(directed[rev])
                neighbors[directed[rev]].add(name)
        stack = [cells[0][0]]
        seen_cells = set(stack)
        while stack:
            for other in neighbors[stack.pop()]:
                if other not in seen_cells:
                    seen_cells.add(other)
                    stack.append(other)
        if len(seen_cells) != len(cells):
            out.append("non-disk: cell complex is disconnected")
    return out


def validate_ct(ct: ConstrainedTriangulation) -> ValidationReport:
    """Full invariant check; violations are reported, never raised."""
    out = []
    seen = set()
    for v in ct.vertices:
        if not v:
            out.append("empty vertex name")
        if v in seen:
            out.append(f"duplicate vertex {v}")
        seen.add(v)
    for c in ct.corners:
        if c not in seen:
            out.append(f"corner {c} is not a declared vertex")
    if len(set(ct.corners)) != 4:
        out.append("corners are not four distinct vertices")
    for t in ct.triangles:
        if len(set(t.verts)) != 3:
            out.append(f"triangle {t.id} has repeated vertices")
        for v in t.verts:
            if v not in seen:
                out.append(f"triangle {t.id} uses undeclared vertex {v}")
    if out:
        return ValidationReport(False, out)

    cells = [(t.id, t.verts) for t in ct.triangles]
    out.extend(_disk_violations(cells, ct.corners, ct.vertices))

    # Constraint conditions: disjoint dead sets, contiguity, size.
    used = {}
    for idx, c in enumerate(ct.constraints):
        for tid in c.triangles:
            if tid in used:
                out.append(
                    "overlapping constraint triangle sets: triangle "
                    f"{tid} in constraints {used[tid]} and {idx}")
            used[tid] = idx
        if len(c.vertices) < 3:
            out.append(f"constraint {idx} has fewer than 3 vertices")
        if not _contiguous(ct, c.triangles):
            out.append(f"non-contiguous constraint: {sorted(c.triangles)}")
    return ValidationReport(not out, out)


def _contiguous(ct, triangle_ids):
    """True when the triangles form a connected subgraph of the dual graph."""
    ids = list(triangle_ids)
    if not ids:
        return False
    edges_of = {
        tid: {frozenset(e) for e in ct.triangle_by_id[tid].directed_edges()}
        for tid in ids
    }
    remaining = set(ids)
    stack = [ids[0]]
    remaining.discard(ids[0])
    while stack:
        cur = stack.pop()
        hits = [t for t in remaining if edges_of[cur] & edges_of[t]]
        for t in hits:
            remaining.discard(t)
            stack.append(t)
    return not remaining


def living_triangles(ct: ConstrainedTriangulation) -> list[str]:
    """Triangle ids not swallowed by any constraint vertex set, in input order."""
    out = []
    for t in ct.triangles:
        verts = set(t.verts)
        if not any(verts <= c.vertices for c in ct.constraints):
            out.append(t.id)
    return out


def is_combinatorially_irreducible(ct: ConstrainedTriangulation) -> bool:
    """No two constraints may share more than one vertex."""
    cs = ct.constraints
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if len(cs[i].vertices & cs[j].vertices) > 1:
                return False
    return True


# -- classical dissections -> generalized dissections ----------------------


@dataclass(frozen=True)
class GeneralizedDissection:
    """Oriented triangles plus totally degenerate constraint polygons.

    ``constraints`` holds cyclically ordered vertex tuples (the poofagon
    boundaries); ``corners`` are the four boundary vertices in counter-
    clockwise order starting at the bottom-left.
    """

    points: dict[str, tuple[Fraction, Fraction]]
    triangles: tuple[OrientedTriangle, ...]
    constraints: tuple[tuple[str, ...], ...]
    corners: tuple[str, str, str, str]


def validate_gd(gd: GeneralizedDissection) -> ValidationReport:
    out = []
    for t in gd.triangles:
        pts = [gd.points[v] for v in t.verts]
        if triangle_area(*pts) == 0:
            out.append(f"triangle {t.id} is degenerate as drawn")
    for idx, poly in enumerate(gd.constraints):
        if len(poly) < 3:
            out.append(f"constraint {idx} has fewer than 3 vertices")
            continue
        pts = [gd.points[v] for v in poly]
        base = next(((a, b) for a in pts for b in pts if a != b), None)
        if base is not None:
            a, b = base
            if any(triangle_area(a, b, c) != 0 for c in pts):
                out.append(f"constraint {idx} is not collinear as drawn")
    for i in range(len(gd.constraints)):
        for j in range(i + 1, len(gd.constraints)):
            common = set(gd.constraints[i]) & set(gd.constraints[j])
            if len(common) > 1:
                out.append(
                    f"constraints {i} and {j} share vertices {sorted(common)}")
    cells = [(t.id, t.verts) for t in gd.triangles]
    cells += [(f"poofagon{k}", tuple(poly)) for k, poly in enumerate(gd.constraints)]
    out.extend(_disk_violations(cells, gd.corners, tuple(gd.points)))
    return ValidationReport(not out, out)


def _interiors_disjoint(tri_a, tri_b):
    """Exact separating-axis test: True when the open triangles do not meet."""
    for first, second in ((tri_a, tri_b), (tri_b, tri_a)):
        for i in range(3):
            p1, p2 = first[i], first[(i + 1) % 3]
            opp = first[(i + 2) % 3]
            d = (p2[0] - p1[0], p2[1] - p1[1])
            side = d[0] * (opp[1] - p1[1]) - d[1] * (opp[0] - p1[0])
            sgn = 1 if side > 0 else -1
            if all(
                sgn * (d[0] * (q[1] - p1[1]) - d[1] * (q[0] - p1[0])) <= 0
                for q in second
            ):
                return True
    return False


def _strictly_inside_segment(p, a, b):
    if triangle_area(p, a, b) != 0:
        return False
    dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
    length2 = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return 0 < dot < length2


def _line_key(a, b):
    """Canonical (A, B, C) for the line Ax + By = C through two points."""
    A = b[1] - a[1]
    B = a[0] - b[0]
    C = A * a[0] + B * a[1]
    dens = [x.denominator for x in (A, B, C)]
    m = dens[0] * dens[1] // gcd(dens[0], dens[1])
    m = m * dens[2] // gcd(m, dens[2])
    ai, bi, ci = int(A * m), int(B * m), int(C * m)
    g = gcd(gcd(abs(ai), abs(bi)), abs(ci)) or 1
    ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return ai, bi, ci


def dissection_to_generalized(points, ccw_triangles) -> GeneralizedDissection:
    """Convert a classical dissection of a square into a generalized dissection.

    ``points`` maps vertex ids to exact rational pairs; ``ccw_triangles``
    lists (id, (v1, v2, v3)) counterclockwise.  The constraints are the
    maximal segments: lines covered by edges carrying at least three
    vertices and no unconstrained vertex in the interior, each cyclically
    ordered by walking the boundary of a thin neighborhood of the segment
    counterclockwise.

    Raises NotADissection when exact bookkeeping shows overlap, uncovered
    area, a non-square hull, or wrongly oriented triangles.
    """
    pts = {v: (Fraction(p[0]), Fraction(p[1])) for v, p in points.items()}
    triangles = tuple(
        t if isinstance(t, OrientedTriangle) else OrientedTriangle(*t)
        for t in ccw_triangles
    )
    if not triangles:
        raise NotADissection("no triangles given")
    for t in triangles:
        for v in t.verts:
            if v not in pts:
                raise NotADissection(f"triangle {t.id} uses unknown vertex {v}")
        if triangle_area(*(pts[v] for v in t.verts)) <= 0:
            raise NotADissection(
                f"triangle {t.id} is degenerate or not counterclockwise")

    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    if xmax - xmin != ymax - ymin or xmax == xmin:
        raise NotADissection("vertex hull is not a square")
    side = xmax - xmin
    total = sum(triangle_area(*(pts[v] for v in t.verts)) for t in triangles)
    if total != side * side:
        raise NotADissection(
            f"areas sum to {total}, square has area {side * side}")
    coords = [tuple(pts[v] for v in t.verts) for t in triangles]
    for i in range(len(triangles)):
        for j in range(i + 1, len(triangles)):
            if not _interiors_disjoint(coords[i], coords[j]):
                raise NotADissection(
                    f"triangles {triangles[i].id} and {triangles[j].id} overlap")

    by_point = {}
    for v, p in pts.items():
        if p in by_point:
            raise NotADissection(f"vertices {by_point[p]} and {v} coincide")
        by_point[p] = v
    corner_pts = [(xmin, ymin), (xmax, ymin), (xmax, ymax), (xmin, ymax)]
    try:
        corners = tuple(by_point[c] for c in corner_pts)
    except KeyError:
        raise NotADissection("a corner of the square is not a vertex") from None

    # Edges of the dissection, plus the square sides for the constrained test.
    edge_set = set()
    for t in triangles:
        for a, b in t.directed_edges():
            edge_set.add(frozenset((a, b)))
    edges = [tuple(e) for e in edge_set]
    square_sides = [
        (corner_pts[i], corner_pts[(i + 1) % 4]) for i in range(4)
    ]
    constrained = set()
    for v, p in pts.items():
        inside_edge = any(
            _strictly_inside_segment(p, pts[a], pts[b]) for a, b in edges
        )
        inside_side = any(_strictly_inside_segment(p, a, b) for a, b in square_sides)
        if inside_edge or inside_side:
            constrained.add(v)

    # Group edges by supporting line, take connected components, split at
    # unconstrained vertices, keep pieces with >= 3 vertices.
    lines = {}
    for a, b in edges:
        lines.setdefault(_line_key(pts[a], pts[b]), []).append((a, b))
    constraints = []
    for key, line_edges in sorted(lines.items()):
        pieces = _maximal_segments(pts, line_edges, constrained)
        for piece in pieces:
            constraints.append(_cyclic_order(pts, piece, edges))

    gd = GeneralizedDissection(pts, triangles, tuple(constraints), corners)
    report = validate_gd(gd)
    if not report.ok:
        raise NotADissection("; ".join(report.violations))
    return gd


def _maximal_segments(pts, line_edges, constrained):
    """Split the union of collinear edges at unconstrained vertices; keep
    pieces with at least three vertices, each as a position-sorted list."""
    verts = {v for e in line_edges for v in e}
    a0, b0 = line_edges[0]
    d = (pts[b0][0] - pts[a0][0], pts[b0][1] - pts[a0][1])
    origin = pts[a0]

    def pos(v):
        p = pts[v]
        return (p[0] - origin[0]) * d[0] + (p[1] - origin[1]) * d[1]

    ordered = sorted(verts, key=pos)
    index = {v: i for i, v in enumerate(ordered)}
    covered = [False] * (len(ordered) - 1)
    for a, b in line_edges:
        i, j = sorted((index[a], index[b]))
        for k in range(i, j):
            covered[k] = True
    pieces = []
    current = [ordered[0]]
    for k in range(len(ordered) - 1):
        if covered[k]:
            current.append(ordered[k + 1])
        else:
            pieces.append(current)
            current = [ordered[k + 1]]
    pieces.append(current)
    split = []
    for piece in pieces:
        part = [piece[0]]
        for v in piece[1:-1]:
            part.append(v)
            if v not in constrained:
                split.append(part)
                part = [v]
        if len(piece) > 1:
            part.append(piece[-1])
        split.append(part)
    return [p for p in split if len(p) >= 3]


def _cyclic_order(pts, piece, edges):
    """Cyclic vertex order of one maximal segment via the counterclockwise
    regular-neighborhood walk: vertices with an edge strictly right of the
    segment direction in ascending position, then those with an edge
    strictly left in descending position."""
    a, b = pts[piece[0]], pts[piece[-1]]
    d = (b[0] - a[0], b[1] - a[1])
    on_line = set(piece)
    has_left = {v: False for v in piece}
    has_right = {v: False for v in piece}
    for e in edges:
        for v, w in (e, e[::-1]):
            if v in on_line:
                cross = d[0] * (pts[w][1] - pts[v][1]) - d[1] * (pts[w][0] - pts[v][0])
                if cross > 0:
                    has_left[v] = True
                elif cross < 0:
                    has_right[v] = True
    walk = [v for v in piece if has_right[v]]
    walk += [v for v in reversed(piece) if has_left[v]]
    cyc = []
    for v in walk:
        if cyc and cyc[-1] == v:
            continue
        cyc.append(v)
    while len(cyc) > 1 and cyc[0] == cyc[-1]:
        cyc.pop()
    if sorted(cyc) != sorted(piece):
        raise NotADissection(
            f"cannot order constraint through {piece} cyclically")
    return tuple(cyc)


# -- generalized dissections -> constrained triangulations ------------------


def generalized_to_ct(gd: GeneralizedDissection, fan_choice=None) -> ConstrainedTriangulation:
    """Triangulate each poofagon by a fan and record it as a dead constraint.

    ``fan_choice`` maps a cyclic vertex tuple to the fan root (default:
    lexicographically least vertex).  Living triangles correspond 1-1 to
    the triangles of the generalized dissection, with the same ids.
    """
    if fan_choice is None:
        fan_choice = min
    triangles = list(gd.triangles)
    used_ids = {t.id for t in triangles}
    constraint_sets = []
    for k, poly in enumerate(gd.constraints):
        root = fan_choice(poly)
        if root not in poly:
            raise ValueError(f"fan root {root!r} is not a vertex of constraint {k}")
        i = poly.index(root)
        cyc = poly[i:] + poly[:i]
        dead = []
        for j in range(1, len(cyc) - 1):
            tid = f"k{k}.{j}"
            while tid in used_ids:
                tid += "'"
            used_ids.add(tid)
            tri = OrientedTriangle(tid, (cyc[0], cyc[j], cyc[j + 1]))
            triangles.append(tri)
            dead.append(tid)
        constraint_sets.append(dead)
    return ConstrainedTriangulation(
        vertices=tuple(gd.points),
        corners=gd.corners,
        triangles=triangles,
        constraints=constraint_sets,
    )
