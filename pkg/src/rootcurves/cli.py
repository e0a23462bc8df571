"""Command-line front end.

Subcommands: roots, curve, intersect, ext, verify and render.  JSON goes to
stdout with a stable key order.  Exit codes: 0 success, 1 verification
failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import geom_oracle as geo
from .annulus import (
    annulus_geometric_pair,
    build_gamma,
    int_annulus,
    Unsupported,
)
from .ext_oracle import ext_dim_cluster, ext_dim_kq, string_word
from .root_system import (
    ReflectionWord,
    Root,
    class_dict,
    classify,
    enumerate_positive_real,
    is_positive_real,
    plateau,
)
from .word_builder import (
    Crossing,
    PlaneCurve,
    S,
    build_F,
    spiral_decompose,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CLASS_FILTERS = {
    "all": ("type1", "type2", "schur_left", "schur_right"),
    "type1": ("type1",),
    "type2": ("type2",),
    "schur": ("schur_left", "schur_right"),
    "schur_left": ("schur_left",),
    "schur_right": ("schur_right",),
}


class UsageError(Exception):
    pass


# JSON codecs

def encode_root(v: Sequence[int]) -> list[int]:
    return [int(x) for x in v]


def decode_root(data) -> Root:
    return Root(data)


def encode_word(w: ReflectionWord) -> dict:
    return {"base": w.base, "letters": list(w.letters)}


def decode_word(data: dict, n: int) -> ReflectionWord:
    return ReflectionWord(n, data["base"], tuple(data["letters"]))


def encode_curve(c: PlaneCurve) -> dict:
    return {
        "n": c.n,
        "start": c.start,
        "family": c.family,
        "steps": [[s.ray, s.direction, s.role, s.loop] for s in c.steps],
    }


def decode_curve(data: dict) -> PlaneCurve:
    steps = tuple(Crossing(r, d, role, loop) for r, d, role, loop in data["steps"])
    return PlaneCurve(data["n"], data["start"], steps, data["family"])


def root_record(v: Sequence[int]) -> dict:
    return {"root": encode_root(v), "class": class_dict(classify(v))}


def curve_record(v: Sequence[int]) -> dict:
    c = build_F(v)
    d = spiral_decompose(c)
    g = build_gamma(v)
    rec = root_record(v)
    rec["word"] = encode_word(S(c))
    rec["crossings"] = list(c.crossings)
    rec["decomposition"] = {
        "m": d.m,
        "spiral": list(d.spiral),
        "hook": list(d.hook),
        "anchor": d.anchor,
        "shift": d.shift,
    }
    rec["annulus"] = {"start": g.start, "end": g.end, "winding": g.winding}
    rec["string"] = list(string_word(v).vertices)
    return rec


# argument parsing helpers

def parse_root(text: str) -> Root:
    try:
        return Root(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad root {text!r}: {exc}") from None


def parse_real_root(text: str) -> Root:
    v = parse_root(text)
    cls = classify(v)
    if not is_positive_real(cls):
        raise UsageError(f"{list(v)} is {cls.tag}, not a positive real root; F is undefined")
    return v


def parse_range(text: str) -> range:
    """'3..5' or '4'; an inverted range is empty."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = range(int(lo), int(hi) + 1)
        else:
            r = range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if len(r) and r.start < 3:
        raise UsageError("n must be at least 3")
    return r


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# subcommands

def cmd_roots(args) -> int:
    if args.n < 3:
        raise UsageError("n must be at least 3")
    if args.max_m < 0:
        raise UsageError("--max-m must be non-negative")
    keep = CLASS_FILTERS[args.cls]
    out = [root_record(v) for v, c in enumerate_positive_real(args.n, args.max_m) if c.tag in keep]
    _emit(out)
    return EXIT_OK


def cmd_curve(args) -> int:
    _emit(curve_record(parse_real_root(args.root)))
    return EXIT_OK


def _plane_pair(a: Root, b: Root, covered: bool) -> tuple[int, str]:
    ca, cb = build_F(a), build_F(b)
    if covered:
        return geo.plane_pair_count(ca, cb), "canonical"
    count, _ = geo.plane_pair_upper_bound(ca, cb)
    return count, "search"


def intersect_record(a: Root, b: Root, model: str = "all") -> dict:
    if len(a) != len(b):
        raise UsageError("roots have different lengths")
    ga, gb = build_gamma(a), build_gamma(b)
    formula = int_annulus(ga, gb)
    covered = formula is not Unsupported
    rec: dict = {"a": encode_root(a), "b": encode_root(b)}
    if model in ("formula", "all"):
        rec["formula"] = formula if covered else "unsupported"
    if model in ("plane", "all"):
        rec["plane"], rec["plane_method"] = _plane_pair(a, b, covered)
    if model in ("annulus", "all"):
        rec["annulus"] = annulus_geometric_pair(ga, gb)
    rec["self"] = {
        "a": geo.plane_self_count(build_F(a)),
        "b": geo.plane_self_count(build_F(b)),
    }
    return rec


def cmd_intersect(args) -> int:
    _emit(intersect_record(parse_real_root(args.a), parse_real_root(args.b), args.model))
    return EXIT_OK


def cmd_ext(args) -> int:
    a, b = parse_real_root(args.a), parse_real_root(args.b)
    if len(a) != len(b):
        raise UsageError("roots have different lengths")
    dim = ext_dim_kq(a, b) if args.category == "module" else ext_dim_cluster(a, b)
    _emit({"a": encode_root(a), "b": encode_root(b), "category": args.category, "dim": dim})
    return EXIT_OK


@dataclass
class VerifyRow:
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    tag_a: str
    tag_b: str
    m: int
    lam: Optional[int]
    formula: Optional[int]
    plane: int
    annulus: int
    ext: int
    passed: Optional[bool] = None

    def as_dict(self) -> dict:
        return {
            "n": self.n, "a": list(self.a), "b": list(self.b),
            "tag_a": self.tag_a, "tag_b": self.tag_b, "m": self.m, "lambda": self.lam,
            "formula": "unsupported" if self.formula is None else self.formula,
            "plane": self.plane, "annulus": self.annulus, "ext_cluster": self.ext,
            "pass": self.passed,
        }


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(r.passed is False for r in self.rows)

    def as_dict(self) -> dict:
        checked = sum(r.passed is not None for r in self.rows)
        return {
            "rows": [r.as_dict() for r in self.rows],
            "summary": {
                "rows": len(self.rows),
                "checked": checked,
                "passed": checked - self.failed,
                "failed": self.failed,
                "unsupported": len(self.rows) - checked,
            },
        }


def covered_pairs(n: int, m_max: int, lam_max: int) -> list[tuple[Root, Root, int]]:
    """Pairs (alpha, alpha + lam(1..1)) of one class and shape, both with plateau <= m_max."""
    out = []
    for v, cls in enumerate_positive_real(n, m_max):
        for lam in range(lam_max + 1):
            if cls.m + lam > m_max:
                break
            w = Root(x + lam for x in v)
            if int_annulus(build_gamma(v), build_gamma(w)) is not Unsupported:
                out.append((v, w, lam))
    return out


def control_pairs(n: int, m_max: int, limit: int) -> list[tuple[Root, Root]]:
    """First ``limit`` pairs outside the intersection formula's hypotheses."""
    roots = [v for v, _ in enumerate_positive_real(n, min(m_max, 1))]
    out = []
    for i, v in enumerate(roots):
        for w in roots[i + 1:]:
            if len(out) >= limit:
                return out
            if int_annulus(build_gamma(v), build_gamma(w)) is Unsupported:
                out.append((v, w))
    return out


def run_verify(ns: range, m_max: int, lam_max: int, controls: int = 0,
               fault: bool = False) -> VerifyReport:
    report = VerifyReport()
    for n in ns:
        for v, w, lam in covered_pairs(n, m_max, lam_max):
            formula = int_annulus(build_gamma(v), build_gamma(w))
            if fault and not report.rows:
                formula += 1
            plane = geo.plane_pair_count(build_F(v), build_F(w))
            ann = annulus_geometric_pair(build_gamma(v), build_gamma(w))
            ext = ext_dim_cluster(v, w)
            report.rows.append(VerifyRow(
                n, tuple(v), tuple(w), classify(v).tag, classify(w).tag, plateau(v), lam,
                formula, plane, ann, ext, formula == plane == ann == ext))
        for v, w in control_pairs(n, m_max, controls):
            plane, _ = geo.plane_pair_upper_bound(build_F(v), build_F(w))
            report.rows.append(VerifyRow(
                n, tuple(v), tuple(w), classify(v).tag, classify(w).tag, plateau(v), None,
                None, plane, annulus_geometric_pair(build_gamma(v), build_gamma(w)),
                ext_dim_cluster(v, w)))
    report.rows.sort(key=lambda r: (r.n, r.a, r.b))
    return report


def cmd_verify(args) -> int:
    if args.max_m < 0 or args.max_lambda < 0:
        raise UsageError("--max-m and --max-lambda must be non-negative")
    report = run_verify(parse_range(args.n), args.max_m, args.max_lambda,
                        args.controls, args.inject_fault)
    _emit(report.as_dict())
    return EXIT_FAIL if report.failed else EXIT_OK


# SVG

def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def spline_path(pts: Sequence[tuple[float, float]]) -> str:
    """Cubic Catmull-Rom spline through the points, as SVG path data."""
    if len(pts) < 2:
        raise ValueError("a path needs two points")
    d = [f"M {_fmt(pts[0][0])} {_fmt(pts[0][1])}"]
    for i in range(len(pts) - 1):
        p0 = pts[i - 1] if i else pts[i]
        p1, p2 = pts[i], pts[i + 1]
        p3 = pts[i + 2] if i + 2 < len(pts) else p2
        c1 = (p1[0] + (p2[0] - p0[0]) / 6, p1[1] + (p2[1] - p0[1]) / 6)
        c2 = (p2[0] - (p3[0] - p1[0]) / 6, p2[1] - (p3[1] - p1[1]) / 6)
        d.append("C " + " ".join(_fmt(t) for t in (*c1, *c2, *p2)))
    return " ".join(d)


COLORS = ("#c0392b", "#2471a3")
HALF = Fraction(1, 2)


class _Svg:
    def __init__(self, width: float, height: float) -> None:
        self.width, self.height = width, height
        self.items: list[str] = []

    def add(self, item: str) -> None:
        self.items.append(item)

    def text(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(self.width)}" '
                f'height="{_fmt(self.height)}" viewBox="0 0 {_fmt(self.width)} {_fmt(self.height)}">')
        return "\n".join([head, *self.items, "</svg>"]) + "\n"


def _dense(poly: geo.Polyline, per_unit: int) -> list[tuple[float, float]]:
    out = []
    vs = [(float(x), float(y)) for x, y in poly.vertices]
    for (x0, y0), (x1, y1) in zip(vs, vs[1:]):
        k = max(1, math.ceil(math.hypot(x1 - x0, y1 - y0) * per_unit))
        out += [(x0 + (x1 - x0) * t / k, y0 + (y1 - y0) * t / k) for t in range(k)]
    out.append(vs[-1])
    return out


def render_plane(roots: Sequence[Root]) -> str:
    n = len(roots[0])
    curves = [build_F(v) for v in roots]
    if len(roots) == 1:
        polys = [geo.realize_plane(curves[0])]
        marks = [pt for _, _, pt in geo.crossing_points(polys[0])]
    else:
        covered = int_annulus(build_gamma(roots[0]), build_gamma(roots[1])) is not Unsupported
        if covered:
            polys = list(geo.realize_plane_pair(*curves))
        else:
            polys = list(geo.plane_pair_upper_bound(*curves)[1])
        marks = [pt for _, _, pt in geo.crossing_points(polys[0], polys[1])]
    L = geo.layout_for(curves)
    top = max(float(y) for p in polys for _, y in p.vertices) + 0.5
    scale = 120.0
    pad = 40.0

    def tr(x, y):
        return (pad + (float(x) - 0.5) * scale, pad + (top - float(y)) * scale)

    svg = _Svg(2 * pad + n * scale, 2 * pad + top * scale)
    for i, x in enumerate(L.ray_x, start=1):
        x0, y0 = tr(x, L.mark_y)
        _, y1 = tr(x, top)
        svg.add(f'<line class="ray" x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x0)}" y2="{_fmt(y1)}" '
                f'stroke="#888" stroke-dasharray="4 3"/>')
    xa, ya = tr(L.ray_x[0] - HALF, 0)
    xb, _ = tr(L.ray_x[-1] + HALF, 0)
    svg.add(f'<line class="axis" x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(ya)}" stroke="#000"/>')
    for ci, p in enumerate(polys):
        pts = [tr(x, y) for x, y in p.vertices]
        svg.add(f'<path class="curve" d="{spline_path(pts)}" fill="none" stroke="{COLORS[ci]}" stroke-width="1.5"/>')
    for i, x in enumerate(L.ray_x, start=1):
        cx, cy = tr(x, L.mark_y)
        svg.add(f'<circle class="mark" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="#000"><title>p{i}</title></circle>')
    bx, by = tr(*L.base)
    svg.add(f'<circle class="mark" cx="{_fmt(bx)}" cy="{_fmt(by)}" r="3" fill="#000"><title>B</title></circle>')
    for x, y in marks:
        cx, cy = tr(x, y)
        svg.add(f'<circle class="crossing" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" fill="none" stroke="#000"/>')
    return svg.text()


def render_annulus(roots: Sequence[Root]) -> str:
    n = len(roots[0])
    L = geo.AnnulusLayout.default(n)
    gammas = [build_gamma(v) for v in roots]
    polys = geo.realize_annulus_many(gammas, L)
    P = L.period
    marks = []
    q = polys[-1]
    for k in geo._sheets(polys[0], q, P):
        qk = q.shifted(k * P)
        if qk == polys[0]:
            continue
        marks += [pt for _, _, pt in geo.crossing_points(polys[0], qk)]
    if len(polys) == 1:
        # a self-crossing is seen from both lifts through it; keep one per orbit
        seen = set()
        uniq = []
        for x, y in marks:
            if (x % P, y) not in seen:
                seen.add((x % P, y))
                uniq.append((x, y))
        marks = uniq
    size, pad = 200.0, 20.0
    R_out = float(L.outer)
    scale = (size / 2 - pad) / R_out
    c = size / 2

    def tr(x, y):
        t = 2 * math.pi * float(x) / float(P)
        r = float(y) * scale
        return (c + r * math.cos(t), c - r * math.sin(t))

    svg = _Svg(size, size)
    for r in (L.inner, L.outer):
        svg.add(f'<circle class="boundary" cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(float(r) * scale)}" '
                f'fill="none" stroke="#000"/>')
    for i in range(1, n + 1):
        pts = [tr(x, y) for x, y in _dense(L.arc(i), 8)]
        svg.add(f'<path class="ray" d="{spline_path(pts)}" fill="none" stroke="#888" stroke-dasharray="4 3"/>')
    for ci, p in enumerate(polys):
        pts = [tr(x, y) for x, y in _dense(p, 8)]
        svg.add(f'<path class="curve" d="{spline_path(pts)}" fill="none" stroke="{COLORS[ci]}" stroke-width="1.5"/>')
    for i in range(1, n + 1):
        cx, cy = tr(*L.mark(i))
        svg.add(f'<circle class="mark" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="#000"><title>M{i}</title></circle>')
    for x, y in marks:
        cx, cy = tr(x, y)
        svg.add(f'<circle class="crossing" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" fill="none" stroke="#000"/>')
    return svg.text()


def cmd_render(args) -> int:
    roots = [parse_real_root(args.root)]
    if args.b:
        roots.append(parse_real_root(args.b))
        if len(roots[0]) != len(roots[1]):
            raise UsageError("roots have different lengths")
    text = render_plane(roots) if args.surface == "plane" else render_annulus(roots)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        sys.stderr.write(f"error: cannot write {args.out}: {exc.strerror}\n")
        return EXIT_USAGE
    _emit({"out": args.out, "surface": args.surface, "curves": len(roots)})
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rootcurves", description="Real roots of A~(n-1,1) as curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("roots", help="list positive real roots")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--max-m", type=int, default=0)
    r.add_argument("--class", dest="cls", choices=sorted(CLASS_FILTERS), default="all")
    r.set_defaults(func=cmd_roots)

    c = sub.add_parser("curve", help="word, crossings and decomposition of F(root)")
    c.add_argument("--root", required=True)
    c.set_defaults(func=cmd_curve)

    i = sub.add_parser("intersect", help="intersection numbers of two roots")
    i.add_argument("--a", required=True)
    i.add_argument("--b", required=True)
    i.add_argument("--model", choices=("formula", "plane", "annulus", "all"), default="all")
    i.set_defaults(func=cmd_intersect)

    e = sub.add_parser("ext", help="dimension of Ext^1")
    e.add_argument("--a", required=True)
    e.add_argument("--b", required=True)
    e.add_argument("--category", choices=("module", "cluster"), default="cluster")
    e.set_defaults(func=cmd_ext)

    v = sub.add_parser("verify", help="check every covered pair")
    v.add_argument("--n", default="3..6", help="range such as 3..5")
    v.add_argument("--max-m", type=int, default=4)
    v.add_argument("--max-lambda", type=int, default=4)
    v.add_argument("--controls", type=int, default=0,
                   help="also report this many uncovered pairs per n")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("render", help="draw curves as SVG")
    d.add_argument("--root", required=True)
    d.add_argument("--b")
    d.add_argument("--surface", choices=("plane", "annulus"), default="plane")
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
