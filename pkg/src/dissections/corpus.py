"""Built-in example triangulations.

All members share vertex names p, q, r, s (corners) and u, v (interior),
with the six-triangle complex labeled so the fixed-corner area formulas are

    2A = y_u                         2D = x_u
    2B = x_v*y_u - x_u*y_v - y_u + y_v    2E = x_u*y_v - x_v*y_u - x_u + x_v
    2C = 1 - x_v                     2F = 1 - y_v

which pins the incidences A=(p,q,u), B=(q,v,u), C=(q,r,v), D=(s,p,u),
E=(s,u,v), F=(r,s,v).
"""

from __future__ import annotations

from .model import ConstrainedTriangulation

_DIAG2_TRIANGLES = [
    ("A", ("p", "q", "u")),
    ("B", ("q", "v", "u")),
    ("C", ("q", "r", "v")),
    ("D", ("s", "p", "u")),
    ("E", ("s", "u", "v")),
    ("F", ("r", "s", "v")),
]


def diagonal_case(n: int) -> ConstrainedTriangulation:
    """The honest chain family: interior path u1..un along the diagonal.

    n=1 and n=2 reproduce the four- and six-triangle basic examples (as
    complexes).  2n+2 triangles total.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    us = [f"u{i}" for i in range(1, n + 1)]
    triangles = [("A1", ("p", "q", us[0]))]
    triangles += [(f"A{j}", ("q", us[j - 1], us[j - 2])) for j in range(2, n + 1)]
    triangles.append((f"A{n + 1}", ("q", "r", us[-1])))
    triangles.append(("B1", ("s", "p", us[0])))
    triangles += [(f"B{j}", ("s", us[j - 2], us[j - 1])) for j in range(2, n + 1)]
    triangles.append((f"B{n + 1}", ("r", "s", us[-1])))
    return ConstrainedTriangulation(
        vertices=["p", "q", "r", "s", *us],
        corners=("p", "q", "r", "s"),
        triangles=triangles,
        constraints=(),
    )


def _diag1():
    return ConstrainedTriangulation(
        vertices=["p", "q", "r", "s", "u"],
        corners=("p", "q", "r", "s"),
        triangles=[
            ("A", ("p", "q", "u")),
            ("B", ("q", "r", "u")),
            ("C", ("r", "s", "u")),
            ("D", ("s", "p", "u")),
        ],
        constraints=(),
    )


def _diag2(constraints=()):
    return ConstrainedTriangulation(
        vertices=["p", "q", "r", "s", "u", "v"],
        corners=("p", "q", "r", "s"),
        triangles=_DIAG2_TRIANGLES,
        constraints=constraints,
    )


_BUILDERS = {
    "diag1": _diag1,
    "diag2": _diag2,
    "ace": lambda: _diag2([{"B"}, {"D"}, {"F"}]),
    "be-merged": lambda: _diag2([{"B", "E"}]),
    "be-split": lambda: _diag2([{"B"}, {"E"}]),
    "trianglicide": lambda: _diag2([{t} for t, _ in _DIAG2_TRIANGLES]),
}


def corpus_names() -> list[str]:
    return sorted(_BUILDERS)


def corpus_ct(name: str) -> ConstrainedTriangulation:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"no corpus member named {name!r}; "
                       f"known: {', '.join(corpus_names())}") from None


def drawable_corpus() -> list[str]:
    """The members with generic drawings (used by sampling-based suites)."""
    return ["diag1", "diag2", "ace", "be-merged"]
