"""SVG 1.1 rendering of drawings: one polygon per living triangle (negatively
oriented ones shaded), one line per constraint segment, dots and labels for
vertices."""

from __future__ import annotations

from fractions import Fraction

from .algebra import triangle_area
from .model import living_triangles

_POSITIVE_FILL = "#dbe9f8"
_NEGATIVE_FILL = "#f3c6c6"


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def render_drawing_svg(ct, drawing, size=420, margin=30) -> str:
    """Deterministic SVG text for a drawing of ``ct``."""
    pts = {v: (float(x), float(y)) for v, (x, y) in drawing.points.items()}
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin) or 1.0
    scale = (size - 2 * margin) / span

    def view(v):
        x, y = pts[v]
        return (margin + (x - xmin) * scale,
                size - margin - (y - ymin) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}" version="1.1">'
    ]
    for tid in living_triangles(ct):
        tri = ct.triangle_by_id[tid]
        area = triangle_area(*(drawing.points[v] for v in tri.verts))
        fill = _NEGATIVE_FILL if area < 0 else _POSITIVE_FILL
        coords = " ".join(
            f"{_fmt(view(v)[0])},{_fmt(view(v)[1])}" for v in tri.verts)
        lines.append(
            f'<polygon points="{coords}" fill="{fill}" fill-opacity="0.85" '
            f'stroke="#333333" stroke-width="1"/>')
    for c in ct.constraints:
        anchor_pts = sorted(drawing.points[v] for v in c.vertices)
        a, b = anchor_pts[0], anchor_pts[-1]
        (x1, y1), (x2, y2) = a, b
        va = next(v for v in c.vertices if drawing.points[v] == a)
        vb = next(v for v in c.vertices if drawing.points[v] == b)
        p1, p2 = view(va), view(vb)
        lines.append(
            f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" '
            f'x2="{_fmt(p2[0])}" y2="{_fmt(p2[1])}" stroke="#aa2222" '
            f'stroke-width="2" stroke-dasharray="6,3"/>')
    for v in ct.vertices:
        x, y = view(v)
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#111111"/>')
        lines.append(
            f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
            f'font-size="13" font-family="sans-serif">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
