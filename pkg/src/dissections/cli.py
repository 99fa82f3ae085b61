"""Command-line surface.

Every command prints one machine-readable JSON report to stdout.  Domain
failures print the error class name on stderr and exit 1; usage problems
exit 2 (argparse default).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import corpus
from .areapoly import area_polynomial, equidissection_obstruction
from .documents import (document_from_ct, document_to_dict, parse_document,
                        serialize_document)
from .errors import DissectionError
from .model import (dissection_to_generalized, generalized_to_ct,
                    living_triangles, validate_ct)
from .monsky import canonical_monsky, is_positive, is_small, split_pm
from .order import deformation_dimension, find_drawing_order
from .param import area_system, build_parameterization, sample_generic_drawing
from .svg import render_drawing_svg
from .valuation import (find_rainbow_triangle, normalized_coloring,
                        rainbow_triangles, two_adic_valuation)
from .algebra import triangle_area


def _load_ct(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = parse_document(fh.read())
    if doc.is_classical():
        gd = dissection_to_generalized(*doc.to_classical())
        return doc, generalized_to_ct(gd)
    return doc, doc.to_ct()


def _emit(report):
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_validate(args):
    doc, ct = _load_ct(args.file)
    report = validate_ct(ct)
    _emit({
        "command": "validate",
        "name": doc.name,
        "ok": report.ok,
        "violations": report.violations,
    })
    return 0 if report.ok else 1


def _cmd_order(args):
    doc, ct = _load_ct(args.file)
    order = find_drawing_order(ct)
    _emit({
        "command": "order",
        "name": doc.name,
        "sequence": list(order.sequence),
        "alpha": {v: order.alpha[v] for v in order.sequence},
        "dimension": deformation_dimension(ct),
    })
    return 0


def _cmd_areas(args):
    doc, ct = _load_ct(args.file)
    par = build_parameterization(ct, fixed_corners=not args.free_corners)
    system = area_system(ct, par)
    _emit({
        "command": "areas",
        "name": doc.name,
        "mode": "free-corners" if args.free_corners else "fixed-corners",
        "parameters": list(par.parameter_names),
        "areas": {t: system.areas[t].canonical_str() for t in system.living},
        "sigma": system.sigma.canonical_str(),
    })
    return 0


def _cmd_areapoly(args):
    doc, ct = _load_ct(args.file)
    t0 = time.monotonic()
    ap = area_polynomial(ct, term_order=args.order)
    _emit({
        "command": "areapoly",
        "name": doc.name,
        "p": ap.canonical_str(),
        "degree": ap.degree,
        "sign_witness": ap.sign_witness,
        "living": list(ap.living),
        "timings": {"seconds": round(time.monotonic() - t0, 6)},
    })
    return 0


def _cmd_monsky(args):
    doc, ct = _load_ct(args.file)
    t0 = time.monotonic()
    ap = area_polynomial(ct)
    pair = canonical_monsky(ap)
    sigma_d = (pair.f + pair.f_tilde)
    mod2_ok = all(c.denominator == 1 and c.numerator % 2 == 0
                  for c in (ap.poly - sigma_d).terms.values())
    small, small_bad = is_small(ap)
    pos_f, neg_f = is_positive(pair.f)
    pos_ft, neg_ft = is_positive(pair.f_tilde)
    split = split_pm(ap)
    obstruction = equidissection_obstruction(ap)
    _emit({
        "command": "monsky",
        "name": doc.name,
        "p": ap.canonical_str(),
        "degree": ap.degree,
        "f": pair.f.canonical_str(),
        "f_tilde": pair.f_tilde.canonical_str(),
        "mod2_ok": mod2_ok,
        "small": small,
        "small_violations": small_bad,
        "positive_f": pos_f,
        "positive_f_tilde": pos_ft,
        "negative_monomials_f": neg_f,
        "negative_monomials_f_tilde": neg_ft,
        "t": split.t.canonical_str(),
        "p_at_ones": str(obstruction.p_at_ones),
        "deformable_to_equal_areas": obstruction.deformable_to_equal_areas,
        "timings": {"seconds": round(time.monotonic() - t0, 6)},
    })
    return 0


def _cmd_sample(args):
    doc, ct = _load_ct(args.file)
    drawing = sample_generic_drawing(ct, seed=args.seed)
    areas = {}
    for tid in living_triangles(ct):
        tri = ct.triangle_by_id[tid]
        areas[tid] = triangle_area(*(drawing.points[v] for v in tri.verts))
    report = {
        "command": "sample",
        "name": doc.name,
        "seed": args.seed,
        "points": {v: [str(x), str(y)] for v, (x, y) in drawing.points.items()},
        "areas": {t: str(a) for t, a in areas.items()},
        "flags": {
            "is_drawing": drawing.flags.is_drawing,
            "is_generic": drawing.flags.is_generic,
            "is_life_preserving": drawing.flags.is_life_preserving,
        },
        "negative_triangles": sorted(t for t, a in areas.items() if a < 0),
    }
    if args.svg:
        text = render_drawing_svg(ct, drawing)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(text)
        report["svg"] = args.svg
    _emit(report)
    return 0


def _cmd_color(args):
    doc, ct = _load_ct(args.file)
    drawing = sample_generic_drawing(ct, seed=args.seed)
    colors = normalized_coloring(ct, drawing)
    rainbow = find_rainbow_triangle(ct, drawing)
    all_rainbows = rainbow_triangles(ct, drawing)
    tri = ct.triangle_by_id[rainbow]
    area = triangle_area(*(drawing.points[v] for v in tri.verts))
    _emit({
        "command": "color",
        "name": doc.name,
        "seed": args.seed,
        "colors": colors,
        "rainbow": rainbow,
        "rainbow_all": all_rainbows,
        "rainbow_count_odd": len(all_rainbows) % 2 == 1,
        "rainbow_area": str(area),
        "rainbow_area_valuation": two_adic_valuation(area),
    })
    return 0


def _cmd_corpus(args):
    if args.action == "list":
        _emit({"command": "corpus", "names": corpus.corpus_names()})
        return 0
    ct = corpus.corpus_ct(args.name)
    doc = document_from_ct(ct, name=args.name)
    sys.stdout.write(serialize_document(doc))
    return 0


def _cmd_diagonal(args):
    ct = corpus.diagonal_case(args.n)
    doc = document_from_ct(ct, name=f"diagonal{args.n}")
    sys.stdout.write(serialize_document(doc))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dissections",
        description="Constrained triangulations of a square: validation, "
                    "deformation parameterization, area and Monsky polynomials, "
                    "2-adic colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the triangulation invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("order", help="drawing order, alphas, dimension")
    p.add_argument("file")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("areas", help="area rational functions of the living triangles")
    p.add_argument("file")
    p.add_argument("--free-corners", action="store_true")
    p.set_defaults(func=_cmd_areas)

    p = sub.add_parser("areapoly", help="the area polynomial")
    p.add_argument("file")
    p.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
    p.set_defaults(func=_cmd_areapoly)

    p = sub.add_parser("monsky", help="area polynomial plus the canonical Monsky pair")
    p.add_argument("file")
    p.set_defaults(func=_cmd_monsky)

    p = sub.add_parser("sample", help="sample a generic drawing")
    p.add_argument("file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--svg")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("color", help="2-adic coloring of a sampled drawing")
    p.add_argument("file")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("corpus", help="list or emit built-in examples")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("diagonal", help="emit the n-th diagonal chain triangulation")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_diagonal)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "corpus" and args.action == "emit" and not args.name:
        parser.error("corpus emit requires a name")
    try:
        return args.func(args)
    except DissectionError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (OSError, KeyError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
