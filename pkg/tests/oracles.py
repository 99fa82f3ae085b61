"""Independent test oracles: exact linear algebra, brute-force checks, and a
random planar triangulation generator.  Everything here deliberately avoids
the production code paths it is used to verify."""

from __future__ import annotations

from fractions import Fraction

from dissections.model import ConstrainedTriangulation


def solve_exact(rows, rhs):
    """Gaussian elimination over Fraction.

    Returns ("none", None), ("unique", solution) or ("many", particular).
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n]:
            return "none", None
    solution = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        solution[c] = a[i][n]
    return ("unique" if len(pivots) == n else "many"), solution


def brute_vanishes_on_samples(poly_callable, samples):
    """True when the callable is zero at every provided sample point."""
    return all(poly_callable(s) == 0 for s in samples)


def _rotate_to(tri, edge):
    a, b = edge
    for i in range(3):
        if tri[i] == a and tri[(i + 1) % 3] == b:
            return (tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3])
    raise ValueError(f"edge {edge} not in triangle {tri}")


def random_triangulation(rng, n_interior, n_flips=10):
    """Random honest triangulation of the square by vertex insertion and flips.

    Starts from the two-triangle square, inserts ``n_interior`` vertices by
    1-to-3 splits of random triangles, then applies random edge flips that
    keep the complex simplicial.
    """
    tris = [("p", "q", "r"), ("p", "r", "s")]
    for i in range(n_interior):
        k = rng.randrange(len(tris))
        a, b, c = tris.pop(k)
        v = f"i{i + 1}"
        tris += [(a, b, v), (b, c, v), (c, a, v)]
    for _ in range(n_flips):
        directed = {}
        for idx, t in enumerate(tris):
            for j in range(3):
                directed[(t[j], t[(j + 1) % 3])] = idx
        interior_edges = sorted(
            e for e in directed if (e[1], e[0]) in directed and e < (e[1], e[0]))
        if not interior_edges:
            break
        a, b = interior_edges[rng.randrange(len(interior_edges))]
        i1, i2 = directed[(a, b)], directed[(b, a)]
        _, _, c = _rotate_to(tris[i1], (a, b))
        _, _, d = _rotate_to(tris[i2], (b, a))
        if c == d or (c, d) in directed or (d, c) in directed:
            continue
        tris[i1] = (a, d, c)
        tris[i2] = (d, b, c)
    vertices = ["p", "q", "r", "s"] + [f"i{i + 1}" for i in range(n_interior)]
    return ConstrainedTriangulation(
        vertices=vertices,
        corners=("p", "q", "r", "s"),
        triangles=[(f"T{i}", t) for i, t in enumerate(tris)],
        constraints=(),
    )


def peel_stages(ct):
    """Rerun the valence peeling independently, returning the stage sets.

    Raises AssertionError if a stage comes up empty while interior vertices
    remain.
    """
    adj = {v: set(nb) for v, nb in ct.adjacency().items()}
    interior = set(ct.interior_vertices())
    stages = []
    while interior:
        stage = {v for v in interior if len(adj[v]) < 6}
        assert stage, f"peeling stuck with interior {sorted(interior)}"
        for v in stage:
            for w in adj[v]:
                adj[w].discard(v)
            adj[v] = set()
        interior -= stage
        stages.append(stage)
    return stages
