"""JSON document format for triangulations and classical dissections.

Schema (UTF-8 JSON object):

    name         optional string
    vertices     list of vertex id strings
    corners      list of exactly 4 vertex ids
    triangles    list of {"id": str, "verts": [v1, v2, v3]}
    constraints  optional list of {"triangles": [triangle ids]}
    points       optional map id -> ["a/b", "c/d"] exact rationals
                 (classical-dissection input)

Rationals are serialized as strings so round trips are lossless in any
host.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DuplicateId, SchemaError
from .model import ConstrainedTriangulation


@dataclass
class TriangulationDocument:
    name: str
    vertices: list[str]
    corners: tuple[str, str, str, str]
    triangles: list[tuple[str, tuple[str, str, str]]]
    constraints: list[list[str]] = field(default_factory=list)
    points: dict[str, tuple[Fraction, Fraction]] | None = None

    def to_ct(self) -> ConstrainedTriangulation:
        return ConstrainedTriangulation(
            vertices=self.vertices,
            corners=self.corners,
            triangles=self.triangles,
            constraints=self.constraints,
        )

    def to_classical(self):
        """(points, ccw triangle list) for the classical-dissection pipeline."""
        if self.points is None:
            raise SchemaError("points", "document has no coordinates")
        return dict(self.points), list(self.triangles)

    def is_classical(self):
        return self.points is not None


def _expect(cond, path, message):
    if not cond:
        raise SchemaError(path, message)


def _parse_rational(text, path):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise SchemaError(path, f"not an exact rational: {text!r}") from None


def parse_document(source) -> TriangulationDocument:
    """Parse JSON text or an already-decoded dict into a document."""
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as e:
            raise SchemaError("$", f"invalid JSON: {e}") from None
    else:
        data = source
    _expect(isinstance(data, dict), "$", "top level must be an object")
    name = data.get("name", "")
    _expect(isinstance(name, str), "name", "must be a string")

    vertices = data.get("vertices")
    _expect(isinstance(vertices, list) and vertices, "vertices",
            "must be a non-empty list")
    seen = set()
    for i, v in enumerate(vertices):
        _expect(isinstance(v, str) and v, f"vertices[{i}]",
                "must be a non-empty string")
        if v in seen:
            raise DuplicateId(f"vertex {v!r} declared twice")
        seen.add(v)

    corners = data.get("corners")
    _expect(isinstance(corners, list) and len(corners) == 4, "corners",
            "must be a list of exactly 4 vertex ids")
    for i, c in enumerate(corners):
        _expect(c in seen, f"corners[{i}]", f"unknown vertex {c!r}")

    raw_triangles = data.get("triangles")
    _expect(isinstance(raw_triangles, list) and raw_triangles, "triangles",
            "must be a non-empty list")
    triangles = []
    tri_ids = set()
    for i, t in enumerate(raw_triangles):
        path = f"triangles[{i}]"
        _expect(isinstance(t, dict), path, "must be an object")
        tid = t.get("id")
        _expect(isinstance(tid, str) and tid, f"{path}.id",
                "must be a non-empty string")
        if tid in tri_ids:
            raise DuplicateId(f"triangle {tid!r} declared twice")
        tri_ids.add(tid)
        verts = t.get("verts")
        _expect(isinstance(verts, list) and len(verts) == 3, f"{path}.verts",
                "must be a list of exactly 3 vertex ids")
        for j, v in enumerate(verts):
            _expect(v in seen, f"{path}.verts[{j}]", f"unknown vertex {v!r}")
        triangles.append((tid, tuple(verts)))

    raw_constraints = data.get("constraints", [])
    _expect(isinstance(raw_constraints, list), "constraints", "must be a list")
    constraints = []
    for i, c in enumerate(raw_constraints):
        path = f"constraints[{i}]"
        _expect(isinstance(c, dict), path, "must be an object")
        tris = c.get("triangles")
        _expect(isinstance(tris, list) and tris, f"{path}.triangles",
                "must be a non-empty list of triangle ids")
        for j, tid in enumerate(tris):
            _expect(tid in tri_ids, f"{path}.triangles[{j}]",
                    f"unknown triangle {tid!r}")
        constraints.append(list(tris))

    points = None
    if "points" in data and data["points"] is not None:
        raw_points = data["points"]
        _expect(isinstance(raw_points, dict), "points", "must be an object")
        points = {}
        for v, xy in raw_points.items():
            path = f"points.{v}"
            _expect(v in seen, path, f"unknown vertex {v!r}")
            _expect(isinstance(xy, list) and len(xy) == 2, path,
                    "must be a pair of rational strings")
            points[v] = (_parse_rational(xy[0], f"{path}[0]"),
                         _parse_rational(xy[1], f"{path}[1]"))
        for v in seen:
            _expect(v in points, f"points.{v}", "coordinate missing")

    return TriangulationDocument(name, list(vertices), tuple(corners),
                                 triangles, constraints, points)


def document_to_dict(doc: TriangulationDocument) -> dict:
    data = {
        "name": doc.name,
        "vertices": list(doc.vertices),
        "corners": list(doc.corners),
        "triangles": [{"id": tid, "verts": list(verts)}
                      for tid, verts in doc.triangles],
        "constraints": [{"triangles": list(c)} for c in doc.constraints],
    }
    if doc.points is not None:
        data["points"] = {v: [str(x), str(y)]
                          for v, (x, y) in doc.points.items()}
    return data


def serialize_document(doc: TriangulationDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"


def document_from_ct(ct: ConstrainedTriangulation, name="") -> TriangulationDocument:
    return TriangulationDocument(
        name=name,
        vertices=list(ct.vertices),
        corners=ct.corners,
        triangles=[(t.id, t.verts) for t in ct.triangles],
        constraints=[sorted(c.triangles) for c in ct.constraints],
    )
