"""Drawing orders: degree-of-freedom counts, valence peeling, dimension."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDrawingOrder, PeelingStuck, Reducible
from .model import ConstrainedTriangulation, is_combinatorially_irreducible


@dataclass(frozen=True)
class DrawingOrder:
    """A corner-first total vertex order with nonnegative alphas.

    ``relevant`` maps each vertex to the constraints that consume its
    degrees of freedom, each paired with the constraint's first two
    vertices under the order (the anchors used by the parameterization).
    """

    sequence: tuple[str, ...]
    alpha: dict[str, int]
    relevant: dict[str, tuple]

    def dimension(self):
        return sum(self.alpha.values())


def corner_first_sequence(ct, interior):
    p, q, r, s = ct.corners
    return (p, q, s, r, *interior)


def compute_alpha(ct: ConstrainedTriangulation, sequence) -> DrawingOrder:
    """Alphas for a corner-first total order.

    Corners get 2,2,2,0.  Each later vertex starts at 2 and loses one per
    relevant constraint: one containing it together with at least two
    earlier members.  Raises NotDrawingOrder (carrying the first bad
    vertex as the failure witness) if any alpha would go negative.
    """
    sequence = tuple(sequence)
    p, q, r, s = ct.corners
    if sequence[:4] != (p, q, s, r):
        raise ValueError(f"sequence must start with corners {p},{q},{s},{r}")
    if sorted(sequence) != sorted(ct.vertices):
        raise ValueError("sequence is not a total order on the vertices")
    position = {v: i for i, v in enumerate(sequence)}
    alpha = {p: 2, q: 2, s: 2, r: 0}
    relevant = {v: () for v in sequence}
    for j, vj in enumerate(sequence[4:], start=4):
        hits = []
        for c in ct.constraints:
            if vj not in c.vertices:
                continue
            earlier = sum(1 for w in c.vertices if position[w] <= j)
            if earlier >= 3:
                anchors = sorted(c.vertices, key=position.get)[:2]
                hits.append((c, tuple(anchors)))
        a = 2 - len(hits)
        if a < 0:
            raise NotDrawingOrder(vj)
        alpha[vj] = a
        relevant[vj] = tuple(hits)
    return DrawingOrder(sequence, alpha, relevant)


def find_drawing_order(ct: ConstrainedTriangulation) -> DrawingOrder:
    """Construct a drawing order by iterated low-valence peeling.

    Interior vertices of valence < 6 are removed stage by stage; vertices
    peeled later come earlier in the order, ties broken lexicographically.
    Raises Reducible when two constraints share two vertices, and
    PeelingStuck if the peeling jams (which cannot happen for a valid
    complex).
    """
    if not is_combinatorially_irreducible(ct):
        raise Reducible("two constraints share more than one vertex")
    adj = ct.adjacency()
    corners = set(ct.corners)
    remaining = {v: set(nb) for v, nb in adj.items()}
    alive_interior = {v for v in ct.vertices if v not in corners}
    stages = []
    while alive_interior:
        stage = sorted(v for v in alive_interior if len(remaining[v]) < 6)
        if not stage:
            raise PeelingStuck(
                f"all remaining interior vertices have valence >= 6: "
                f"{sorted(alive_interior)}")
        stages.append(stage)
        for v in stage:
            for w in remaining[v]:
                remaining[w].discard(v)
            remaining[v] = set()
            alive_interior.discard(v)
    interior = [v for stage in reversed(stages) for v in stage]
    return compute_alpha(ct, corner_first_sequence(ct, interior))


def deformation_dimension(ct: ConstrainedTriangulation) -> int:
    """Dimension of the drawing space: the alpha sum of any drawing order.

    Cross-checked against the heuristic count (6 for the corners, 2 per
    interior vertex, minus 1 per constraint vertex beyond the second).
    """
    order = find_drawing_order(ct)
    total = order.dimension()
    heuristic = 6 + 2 * len(ct.interior_vertices())
    heuristic -= sum(len(c.vertices) - 2 for c in ct.constraints)
    if total != heuristic:
        raise AssertionError(
            f"alpha sum {total} disagrees with heuristic count {heuristic}")
    return total
