"""Exact-coordinate drawings of plane and annulus curves, and crossing counts.

Plane picture.  Rays r_i are the vertical half-lines x = X_i, y >= mark_y,
starting at p_i = (X_i, mark_y).  B sits on the real axis.  A curve is drawn
as follows:

* each ray crossing at height h becomes a short horizontal through the ray,
  with a vertical leg on each side;
* legs drop below the marked points, where consecutive crossings are joined
  by horizontals at distinct depths (longer joins run deeper);
* the final join runs down into a thin band above the axis and then straight
  to B.

Cutting the plane along the rays leaves a disc.  In this drawing two joins
cross exactly when their endpoints interleave on the boundary of that disc,
so the only real choice is the order of crossing heights on each ray.  The
canonical height rules below fix that order.

Annulus picture.  The universal cover of the annulus is the strip
R x [1, 3] with period P.  The inner boundary y = 1 carries M_n at multiples
of P and the outer boundary y = 3 carries M_1..M_{n-1}.  Curves with both
ends outside are drawn as shallow parabolic arches, and curves from the
inner point as straight segments.  The intersection number is then a sum
over translates.

All coordinates are Fractions.  All predicates are exact integer tests.
"""
from __future__ import annotations

import math
import os
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from . import _pykernel
from .word_builder import (
    HOOK,
    HOOK_BACK,
    HOOK_LEFT,
    HOOK_RIGHT,
    PlaneCurve,
)

if TYPE_CHECKING:
    from .annulus import AnnulusCurve

try:
    if os.environ.get("ROOTCURVES_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled by environment")
    from ._ckernel import COORD_LIMIT as _COORD_LIMIT
    from ._ckernel import segment_crossings as _compiled_crossings

    BACKEND = "compiled"
except ImportError:
    _compiled_crossings = None
    _COORD_LIMIT = 0
    BACKEND = "python"

Point = tuple[Fraction, Fraction]


class LayoutError(ValueError):
    """Layout parameters leave no room for a transverse drawing."""


class DegeneracyError(RuntimeError):
    """Two segments touch without crossing transversally."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Polyline:
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple((_frac(x), _frac(y)) for x, y in self.vertices)
        if len(verts) < 2:
            raise ValueError("a polyline needs at least two vertices")
        for u, v in zip(verts, verts[1:]):
            if u == v:
                raise ValueError(f"repeated vertex {u}")
        object.__setattr__(self, "vertices", verts)

    @property
    def start(self) -> Point:
        return self.vertices[0]

    @property
    def end(self) -> Point:
        return self.vertices[-1]

    def shifted(self, dx, dy=0) -> "Polyline":
        dx, dy = _frac(dx), _frac(dy)
        return Polyline(tuple((x + dx, y + dy) for x, y in self.vertices))

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [x for x, _ in self.vertices]
        ys = [y for _, y in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def _clean(points: Iterable[Point]) -> tuple[Point, ...]:
    """Drop repeated vertices and middle points of collinear triples."""
    out: list[Point] = []
    for p in points:
        if out and out[-1] == p:
            continue
        if len(out) >= 2:
            (ax, ay), (bx, by) = out[-2], out[-1]
            if (bx - ax) * (p[1] - ay) == (by - ay) * (p[0] - ax):
                out[-1] = p
                continue
        out.append(p)
    return tuple(out)


# exact counting

def _scaled(polys: Sequence[Polyline]) -> list[list[int]]:
    den = 1
    for p in polys:
        for x, y in p.vertices:
            den = math.lcm(den, x.denominator, y.denominator)
    out = []
    for p in polys:
        flat: list[int] = []
        for x, y in p.vertices:
            flat.append(int(x * den))
            flat.append(int(y * den))
        out.append(flat)
    return out


def _kernel(a: list[int], b: Optional[list[int]]):
    if _compiled_crossings is not None:
        big = max(abs(v) for v in (a if b is None else a + b))
        if big < _COORD_LIMIT:
            return _compiled_crossings(a, b)
    return _pykernel.segment_crossings(a, b)


def _segment_contact(p: Point, q: Point, r: Point, s: Point) -> Optional[Point]:
    """Single touching point of segments pq and rs, None for an overlap."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    if orient(p, q, r) == 0 and orient(p, q, s) == 0:
        shared = {p, q} & {r, s}
        # collinear segments meeting end to end are a point contact
        if len(shared) == 1:
            (pt,) = shared
            other_a = q if pt == p else p
            other_b = s if pt == r else r
            if (other_a[0] - pt[0]) * (other_b[0] - pt[0]) + (other_a[1] - pt[1]) * (other_b[1] - pt[1]) < 0:
                return pt
        return None
    for cand, seg in ((r, (p, q)), (s, (p, q)), (p, (r, s)), (q, (r, s))):
        a, b = seg
        if orient(a, b, cand) == 0 and min(a[0], b[0]) <= cand[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= cand[1] <= max(a[1], b[1]):
            return cand
    return None


def _cross(u: Point, v: Point):
    return u[0] * v[1] - u[1] * v[0]


def _between(a: Point, b: Point, d: Point) -> bool:
    """True when direction d lies strictly inside the ccw sweep from a to b."""
    ab = _cross(a, b)
    if ab > 0:
        return _cross(a, d) > 0 and _cross(d, b) > 0
    if ab < 0:
        return not (_cross(b, d) >= 0 and _cross(d, a) >= 0)
    return _cross(a, d) > 0


def _on_segment(a: Point, b: Point, pt: Point) -> bool:
    return (_cross((b[0] - a[0], b[1] - a[1]), (pt[0] - a[0], pt[1] - a[1])) == 0
            and min(a[0], b[0]) <= pt[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]))


def _branches(poly: Polyline, pt: Point) -> Optional[tuple[Point, Point]]:
    """Directions leaving pt along poly, or None if pt is an end of poly."""
    vs = poly.vertices
    if pt in (vs[0], vs[-1]):
        return None
    if pt in vs:
        i = vs.index(pt)
        a, b = vs[i - 1], vs[i + 1]
    else:
        a, b = next((u, v) for u, v in zip(vs, vs[1:]) if _on_segment(u, v, pt))
    return (a[0] - pt[0], a[1] - pt[1]), (b[0] - pt[0], b[1] - pt[1])


def _transverse_at(p: Polyline, q: Polyline, pt: Point) -> bool:
    """Decide whether p and q cross at a common point or only touch."""
    bp, bq = _branches(p, pt), _branches(q, pt)
    if bp is None or bq is None:
        raise DegeneracyError(f"a curve ends on the other at {pt}")
    for u in bp:
        for v in bq:
            if _cross(u, v) == 0 and u[0] * v[0] + u[1] * v[1] > 0:
                raise DegeneracyError(f"curves overlap near {pt}")
    return _between(bp[0], bp[1], bq[0]) != _between(bp[0], bp[1], bq[1])


def count_crossings(p: Polyline, q: Polyline) -> int:
    """Transverse crossings between two polylines.

    Contact at a point that is an endpoint of both polylines (a shared
    marked point) is ignored.  Where a vertex of one polyline lies on the
    other, the local picture decides: a transverse passage counts once and a
    touching point raises DegeneracyError, as does any overlap.
    """
    a, b = _scaled([p, q])
    count, contacts = _kernel(a, b)
    if contacts:
        allowed = {p.start, p.end} & {q.start, q.end}
        points = set()
        for i, j in contacts:
            pt = _segment_contact(p.vertices[i], p.vertices[i + 1], q.vertices[j], q.vertices[j + 1])
            if pt is None:
                raise DegeneracyError(f"segments {i} and {j} overlap")
            if pt not in allowed:
                points.add(pt)
        for pt in sorted(points):
            if not _transverse_at(p, q, pt):
                raise DegeneracyError(f"curves touch at {pt} without crossing")
            count += 1
    return count


def count_self(p: Polyline) -> int:
    """Transverse self-crossings over non-adjacent segment pairs."""
    (a,) = _scaled([p])
    count, contacts = _kernel(a, None)
    if contacts:
        i, j = contacts[0]
        raise DegeneracyError(f"segments {i} and {j} of one polyline touch")
    return count


def crossing_points(p: Polyline, q: Optional[Polyline] = None) -> list[tuple[int, Fraction, Point]]:
    """Crossing points as (segment index on p, parameter, point), sorted along p.

    With q None, self-crossings of p are listed once per crossing, at the
    earlier segment.  Between two polylines a crossing through a vertex is
    listed once, at its first position along p; shared end points are
    skipped.
    """
    same = q is None
    q = p if same else q
    a, b = _scaled([p, q])
    pv = list(zip(a[0::2], a[1::2]))
    qv = list(zip(b[0::2], b[1::2]))
    qbox = [(min(x0, x1), max(x0, x1), min(y0, y1), max(y0, y1))
            for (x0, y0), (x1, y1) in zip(qv, qv[1:])]
    out = []
    seen: set[Point] = set()
    allowed = set() if same else {p.start, p.end} & {q.start, q.end}
    for i in range(len(pv) - 1):
        (ax, ay), (bx, by) = pv[i], pv[i + 1]
        lx, hx, ly, hy = min(ax, bx), max(ax, bx), min(ay, by), max(ay, by)
        for j, (qlx, qhx, qly, qhy) in enumerate(qbox):
            if same and j <= i + 1:
                continue
            if qhx < lx or qlx > hx or qhy < ly or qly > hy:
                continue
            (cx, cy), (dx, dy) = qv[j], qv[j + 1]
            den = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx)
            if den == 0:
                continue
            tn = (cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)
            un = (cx - ax) * (by - ay) - (cy - ay) * (bx - ax)
            if den < 0:
                den, tn, un = -den, -tn, -un
            if not (0 <= tn <= den and 0 <= un <= den):
                continue
            t = Fraction(tn, den)
            (fx, fy), (gx, gy) = p.vertices[i], p.vertices[i + 1]
            pt = (fx + t * (gx - fx), fy + t * (gy - fy))
            if 0 < tn < den and 0 < un < den:
                out.append((i, t, pt))
            elif not same:
                if pt in allowed or pt in seen:
                    continue
                seen.add(pt)
                if _transverse_at(p, q, pt):
                    out.append((i, t, pt))
    out.sort(key=lambda e: (e[0], e[1]))
    return out


# plane layouts

@dataclass(frozen=True)
class Layout:
    """Plane layout.

    ``delta`` is the height offset between successive loops of a spiral and
    ``eps`` the offset of the second curve of a pair.  Successive crossings
    are ``delta / (2n)`` apart in height; all spiral heights must stay within
    half a unit of ``mark_y + 1``.
    """

    ray_x: tuple[Fraction, ...]
    mark_y: Fraction = Fraction(1)
    base: Optional[Point] = None
    delta: Fraction = Fraction(1, 24)
    eps: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        xs = tuple(_frac(x) for x in self.ray_x)
        object.__setattr__(self, "ray_x", xs)
        object.__setattr__(self, "mark_y", _frac(self.mark_y))
        object.__setattr__(self, "delta", _frac(self.delta))
        if self.base is None:
            object.__setattr__(self, "base", ((xs[0] + xs[-1]) / 2, Fraction(0)))
        else:
            object.__setattr__(self, "base", (_frac(self.base[0]), Fraction(0)))
        eps = _frac(self.eps) if self.eps else self.step / 8
        object.__setattr__(self, "eps", eps)
        if len(xs) < 3 or any(b <= a for a, b in zip(xs, xs[1:])):
            raise LayoutError("ray abscissas must be increasing, n >= 3")
        if self.mark_y <= 0 or self.delta <= 0:
            raise LayoutError("mark_y and delta must be positive")
        if not 0 < eps < self.step / 4:
            raise LayoutError("eps must lie strictly between 0 and a quarter step")

    @property
    def n(self) -> int:
        return len(self.ray_x)

    @property
    def step(self) -> Fraction:
        return self.delta / (2 * self.n)

    @classmethod
    def default(cls, n: int, m_max: int = 4) -> "Layout":
        """Rays at x = 1..n, marks at height 1, B at ((n+1)/2, 0)."""
        return cls(tuple(Fraction(i) for i in range(1, n + 1)),
                   delta=Fraction(1, 4 * (m_max + 2)))


def layout_for(curves: Sequence[PlaneCurve], layout: Optional[Layout] = None) -> Layout:
    n = curves[0].n
    if layout is not None:
        if layout.n != n:
            raise LayoutError("layout has the wrong number of rays")
        return layout
    steps = max(len(c.steps) for c in curves)
    loops = steps // (2 * n - 2) + 1
    return Layout.default(n, loops)


def _heights(c: PlaneCurve, n_max: int, L: Layout, copy: bool) -> list[Fraction]:
    """Crossing heights of the canonical drawing.

    Type 1 spirals wind inward from the start, type 2 spirals wind outward
    and are aligned at B, Schur curves wind outward from the start.  The
    copy of a pair is pushed off to one side by eps: to the right of travel
    for type 1, to the left otherwise.
    """
    step = L.step
    y0 = L.mark_y + 1
    reach = (n_max + 1) * step
    if reach >= Fraction(1, 2):
        raise LayoutError(f"{n_max} crossings do not fit with delta={L.delta}")
    gap = step / 2
    N = len(c.steps)
    out = []
    for j, s in enumerate(c.steps):
        d = s.direction
        if c.family == "type1":
            h = L.mark_y + gap if s.role == HOOK else y0 - d * (reach - j * step)
            push = -d
        elif c.family == "type2":
            if s.role == HOOK_LEFT:
                h = L.mark_y + 2 * gap
            elif s.role == HOOK_BACK:
                h = L.mark_y + gap
            elif s.role == HOOK_RIGHT:
                h = y0 + 1
            else:
                h = y0 + d * (reach - (N - 1 - j) * step)
            push = d
        else:
            h = y0 + (j + 1) * step
            push = d
        out.append(h + push * L.eps if copy else h)
    return out


def _route(curves: Sequence[PlaneCurve], heights: Sequence[Sequence[Fraction]], L: Layout) -> list[Polyline]:
    X = L.ray_x
    bx = L.base[0]
    per_ray: dict[int, list] = defaultdict(list)
    for ci, (c, hs) in enumerate(zip(curves, heights)):
        for j, (s, h) in enumerate(zip(c.steps, hs)):
            if h <= L.mark_y:
                raise LayoutError("crossing height below the marked points")
            per_ray[s.ray].append((h, ci, j))
    rank: dict[tuple[int, int], int] = {}
    for items in per_ray.values():
        items.sort()
        for r, (h, ci, j) in enumerate(items):
            if r and items[r - 1][0] == h:
                raise LayoutError("two crossings share a height on one ray")
            rank[(ci, j)] = r
    K = max((len(v) for v in per_ray.values()), default=0)
    gap = min(b - a for a, b in zip(X, X[1:]))
    w = gap / (2 * (K + 2))

    # legs of every crossing: (entry x, exit x, height)
    legs = []
    for ci, (c, hs) in enumerate(zip(curves, heights)):
        row = []
        for j, (s, h) in enumerate(zip(c.steps, hs)):
            off = w * (rank[(ci, j)] + 1)
            xl, xr = X[s.ray - 1] - off, X[s.ray - 1] + off
            row.append((xl, xr, h) if s.direction > 0 else (xr, xl, h))
        legs.append(row)

    # joins: (curve, index, x of first end, x of second end or None for B)
    joins = []
    fans: dict[int, list] = defaultdict(list)
    for ci, c in enumerate(curves):
        row = legs[ci]
        first = row[0][0] if row else None
        fans[c.start].append((ci, first))
        joins.append([None] + [(row[t - 1][1], row[t][0]) for t in range(1, len(row))]
                     + ([(row[-1][1], None)] if row else []))

    # start points fan out in the cyclic order of their other ends
    sigma: dict[int, Fraction] = {}
    for k, members in fans.items():
        xk = X[k - 1]

        def key(item):
            e = item[1]
            if e is None:
                return (1, 0)
            return (0, -e) if e < xk else (2, -e)

        members.sort(key=key)
        for t, (ci, _) in enumerate(members):
            sigma[ci] = w * (t + 1) / (2 * (len(members) + 1))
    for ci, c in enumerate(curves):
        xs = X[c.start - 1] + sigma[ci]
        row = legs[ci]
        joins[ci][0] = (xs, row[0][0] if row else None)

    u_joins = [(ci, t) for ci, js in enumerate(joins) for t, (xa, xb) in enumerate(js) if xb is not None]
    b_joins = [(ci, t) for ci, js in enumerate(joins) for t, (xa, xb) in enumerate(js) if xb is None]
    T, U = len(b_joins), len(u_joins)
    unit = L.mark_y / (T + U + 1)
    level: dict[tuple[int, int], Fraction] = {}
    # longest join deepest; B joins below all, nearest to B highest
    u_joins.sort(key=lambda e: (-abs(joins[e[0]][e[1]][0] - joins[e[0]][e[1]][1]), e))
    for r, e in enumerate(u_joins):
        level[e] = unit * (T + 1 + r)
    b_joins.sort(key=lambda e: (-abs(joins[e[0]][e[1]][0] - bx), e))
    for r, e in enumerate(b_joins):
        level[e] = unit * (1 + r)
    top = L.mark_y - unit / 2

    out = []
    for ci, c in enumerate(curves):
        pts: list[Point] = [(X[c.start - 1], L.mark_y)]
        row = legs[ci]
        for t, (xa, xb) in enumerate(joins[ci]):
            y = level[(ci, t)]
            if t == 0:
                pts.append((xa, top))
            pts.append((xa, y))
            if xb is None:
                pts.append(L.base)
            else:
                h = row[t][2]
                pts += [(xb, y), (xb, h), (row[t][1], h)]
        out.append(Polyline(_clean(pts)))
    return out


def realize_plane(c: PlaneCurve, layout: Optional[Layout] = None) -> Polyline:
    L = layout_for([c], layout)
    if not c.steps:
        # nothing to cross: the marks sit above the open lower region
        return Polyline(((L.ray_x[c.start - 1], L.mark_y), L.base))
    return _route([c], [_heights(c, len(c.steps), L, False)], L)[0]


def realize_plane_pair(c1: PlaneCurve, c2: PlaneCurve,
                       layout: Optional[Layout] = None) -> tuple[Polyline, Polyline]:
    """Draw two curves together.

    Loops of the two curves are aligned as in the canonical drawings, and the
    curve with fewer crossings (the second one on a tie) is the pushed-off
    copy.
    """
    if c1.n != c2.n:
        raise ValueError("curves live on different surfaces")
    L = layout_for([c1, c2], layout)
    n_max = max(len(c1.steps), len(c2.steps))
    copy_first = len(c1.steps) < len(c2.steps)
    h1 = _heights(c1, n_max, L, copy_first)
    h2 = _heights(c2, n_max, L, not copy_first)
    p1, p2 = _route([c1, c2], [h1, h2], L)
    return p1, p2


def plane_pair_count(c1: PlaneCurve, c2: PlaneCurve, layout: Optional[Layout] = None) -> int:
    return count_crossings(*realize_plane_pair(c1, c2, layout))


def plane_self_count(c: PlaneCurve, layout: Optional[Layout] = None) -> int:
    return count_self(realize_plane(c, layout))


# local search over height orders, for pairs outside the canonical rules

def _boundary_key(n: int, ray: int, side: int, h) -> tuple:
    # counter-clockwise order around the disc left after cutting the rays
    return (1, n - ray, side, -h if side == 0 else h)


def _joins_combinatorial(c: PlaneCurve, hs: Sequence) -> list[tuple]:
    n = c.n
    cur = (1, n - c.start, 1, 0)
    out = []
    for s, h in zip(c.steps, hs):
        right, left = _boundary_key(n, s.ray, 0, h), _boundary_key(n, s.ray, 2, h)
        entry, exit_ = (left, right) if s.direction > 0 else (right, left)
        out.append(tuple(sorted((cur, entry))))
        cur = exit_
    out.append(tuple(sorted((cur, (0,)))))
    return out


def _interleave(u, v) -> int:
    a, b = u
    c, d = v
    if len({a, b, c, d}) < 4:
        return 0
    return int(a < c < b < d or c < a < d < b)


def _pair_score(c1, c2, h1, h2) -> int:
    j1 = _joins_combinatorial(c1, h1)
    j2 = _joins_combinatorial(c2, h2)
    return sum(_interleave(u, v) for u in j1 for v in j2)


def plane_pair_upper_bound(c1: PlaneCurve, c2: PlaneCurve, restarts: int = 8,
                           seed: int = 0, layout: Optional[Layout] = None) -> tuple[int, tuple[Polyline, Polyline]]:
    """Fewest crossings found over per-ray height orders.

    Starts from the canonical pair drawing, then runs seeded swap descent
    with random restarts.  The best order is drawn for real and the
    returned count comes from the exact polyline test.  The value bounds
    the minimal intersection number from above.
    """
    L = layout_for([c1, c2], layout)
    n_max = max(len(c1.steps), len(c2.steps))
    copy_first = len(c1.steps) < len(c2.steps)
    base = (_heights(c1, n_max, L, copy_first), _heights(c2, n_max, L, not copy_first))
    slots = [(0, j, s.ray) for j, s in enumerate(c1.steps)] + [(1, j, s.ray) for j, s in enumerate(c2.steps)]
    by_ray: dict[int, list[int]] = defaultdict(list)
    for idx, (_, _, ray) in enumerate(slots):
        by_ray[ray].append(idx)

    def split(order_h):
        h1 = [order_h[i] for i, sl in enumerate(slots) if sl[0] == 0]
        h2 = [order_h[i] for i, sl in enumerate(slots) if sl[0] == 1]
        return h1, h2

    def score(order_h):
        return _pair_score(c1, c2, *split(order_h))

    rng = random.Random(seed)
    start = list(base[0]) + list(base[1])
    best_h, best = start[:], score(start)
    for attempt in range(restarts + 1):
        if attempt == 0:
            h = start[:]
        else:
            h = [0] * len(slots)
            for idxs in by_ray.values():
                perm = idxs[:]
                rng.shuffle(perm)
                for r, i in enumerate(perm):
                    h[i] = Fraction(r + 1)
        cur = score(h)
        improved = True
        while improved:
            improved = False
            for idxs in by_ray.values():
                for x in range(len(idxs)):
                    for y in range(x + 1, len(idxs)):
                        i, k = idxs[x], idxs[y]
                        h[i], h[k] = h[k], h[i]
                        val = score(h)
                        if val < cur:
                            cur, improved = val, True
                        else:
                            h[i], h[k] = h[k], h[i]
        if cur < best:
            best, best_h = cur, h[:]
    # rescale the winning order into the layout's height band
    ranks = [Fraction(0)] * len(slots)
    for idxs in by_ray.values():
        for r, i in enumerate(sorted(idxs, key=lambda i: best_h[i])):
            ranks[i] = L.mark_y + Fraction(1, 2) + Fraction(r + 1, len(idxs) + 1)
    h1, h2 = split(ranks)
    polys = _route([c1, c2], [h1, h2], L)
    return count_crossings(*polys), (polys[0], polys[1])


# annulus

@dataclass(frozen=True)
class AnnulusLayout:
    """Strip model of the annulus.

    The inner boundary is y = ``inner`` with M_n at multiples of ``period``
    and the outer boundary is y = ``outer`` with M_i at ``outer_x[i-1]``.
    Arches between outer points dip by ``curvature * (x - s) * (e - x)``.
    """

    period: Fraction
    outer_x: tuple[Fraction, ...]
    inner: Fraction = Fraction(1)
    outer: Fraction = Fraction(3)
    curvature: Optional[Fraction] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", _frac(self.period))
        xs = tuple(_frac(x) for x in self.outer_x)
        object.__setattr__(self, "outer_x", xs)
        object.__setattr__(self, "inner", _frac(self.inner))
        object.__setattr__(self, "outer", _frac(self.outer))
        if self.curvature is not None:
            object.__setattr__(self, "curvature", _frac(self.curvature))
        if not xs or xs[0] <= 0 or xs[-1] >= self.period or any(b <= a for a, b in zip(xs, xs[1:])):
            raise LayoutError("outer points must increase inside (0, period)")
        if self.outer <= self.inner:
            raise LayoutError("outer radius must exceed inner radius")

    @property
    def n(self) -> int:
        return len(self.outer_x) + 1

    @classmethod
    def default(cls, n: int) -> "AnnulusLayout":
        """Radii 1 and 3, outer points at x = 1..n-1, period n."""
        return cls(Fraction(n), tuple(Fraction(i) for i in range(1, n)))

    def mark(self, i: int, k: int = 0) -> Point:
        """Lift of M_i in sheet k."""
        if i == self.n:
            return (k * self.period, self.inner)
        return (self.outer_x[i - 1] + k * self.period, self.outer)

    def arc(self, i: int, k: int = 0) -> Polyline:
        """Lift of the triangulation arc l_i in sheet k."""
        if i == self.n:
            return Polyline((self.mark(self.n, k), self.mark(1, k + 1)))
        return Polyline((self.mark(self.n, k), self.mark(i, k)))


def _annulus_ends(g: "AnnulusCurve", L: AnnulusLayout) -> tuple[Point, Point]:
    P = L.period
    m = g.winding
    if g.kind == "type1":
        s = L.mark(g.start)
        ex = L.mark(g.end)[0] + (P if g.end <= g.start else 0) + m * P
        return s, (ex, L.outer)
    if g.kind == "type2":
        return L.mark(g.start), (L.mark(g.end)[0] + (m + 1) * P, L.outer)
    if g.kind == "schur_left":
        extra = m + 2 if g.end == 1 else m + 1
        return L.mark(L.n), (L.mark(g.end)[0] + extra * P, L.outer)
    if g.kind == "schur_right":
        return L.mark(L.n), (L.mark(g.end)[0] - (m + 1) * P, L.outer)
    raise ValueError(f"unknown annulus curve kind {g.kind}")


def _grid(L: AnnulusLayout, lo: Fraction, hi: Fraction) -> list[Fraction]:
    P = L.period
    pts = []
    k = math.floor(lo / P) - 1
    while k * P <= hi:
        for x in L.outer_x:
            v = x + k * P
            if lo <= v <= hi:
                pts.append(v)
        k += 1
    return sorted(set(pts))


def annulus_curvature(curves: Sequence["AnnulusCurve"], L: AnnulusLayout) -> Fraction:
    """A curvature safe for every arch among ``curves``.

    Arches must stay inside the strip and be flatter than every straight
    piece (arcs and inner-point curves), so a line meets an arch at most once.
    """
    widths = [Fraction(1)]
    runs = [L.outer_x[0] + L.period]
    for g in curves:
        s, e = _annulus_ends(g, L)
        if s[1] == e[1]:
            widths.append(abs(e[0] - s[0]))
        else:
            runs.append(abs(e[0] - s[0]))
    W = max(widths)
    rise = L.outer - L.inner
    slope = rise / max(runs)
    return min(slope / (2 * W), 2 * rise / (W * W))


def realize_annulus(g: "AnnulusCurve", layout: Optional[AnnulusLayout] = None) -> Polyline:
    """Lift of g to the strip, starting in sheet 0."""
    L = layout or AnnulusLayout.default(g.n)
    if L.n != g.n:
        raise LayoutError("layout has the wrong number of marked points")
    s, e = _annulus_ends(g, L)
    if s[1] != e[1]:
        return Polyline((s, e))
    c = L.curvature if L.curvature is not None else annulus_curvature([g], L)
    lo, hi = sorted((s[0], e[0]))
    if c * (hi - lo) ** 2 / 4 >= L.outer - L.inner:
        raise LayoutError("arch leaves the annulus; lower the curvature")
    xs = _grid(L, lo, hi)
    if s[0] > e[0]:
        xs.reverse()
    return Polyline(tuple((x, L.outer - c * (x - lo) * (hi - x)) for x in xs))


def realize_annulus_many(curves: Sequence["AnnulusCurve"],
                         layout: Optional[AnnulusLayout] = None) -> list[Polyline]:
    """Realize several curves with one shared curvature."""
    L = layout or AnnulusLayout.default(curves[0].n)
    if L.curvature is None:
        L = AnnulusLayout(L.period, L.outer_x, L.inner, L.outer, annulus_curvature(curves, L))
    return [realize_annulus(g, L) for g in curves]


def _sheets(p: Polyline, q: Polyline, period: Fraction) -> range:
    px0, _, px1, _ = p.bbox()
    qx0, _, qx1, _ = q.bbox()
    lo = math.floor((px0 - qx1) / period) - 1
    hi = math.ceil((px1 - qx0) / period) + 1
    return range(lo, hi + 1)


def annulus_crossings(p: Polyline, q: Polyline, period) -> int:
    """Crossings in the annulus of the curves lifted to p and q.

    Sums the crossings of p with every translate of q.  A translate equal
    to p itself stands for a pushed-off parallel copy and contributes 0.
    """
    period = _frac(period)
    total = 0
    for k in _sheets(p, q, period):
        qk = q.shifted(k * period)
        if qk == p:
            continue
        total += count_crossings(p, qk)
    return total


def annulus_self_crossings(p: Polyline, period) -> int:
    twice = annulus_crossings(p, p, period)
    if twice % 2:
        raise DegeneracyError("odd translate count for a self-intersection")
    return twice // 2


def arc_crossings(p: Polyline, L: AnnulusLayout) -> tuple[int, ...]:
    """Crossing count of p with each triangulation arc l_1..l_n."""
    out = []
    for i in range(1, L.n + 1):
        out.append(annulus_crossings(p, L.arc(i), L.period))
    return tuple(out)


def arc_sequence(p: Polyline, L: AnnulusLayout) -> list[int]:
    """Arc indices in the order p meets them."""
    hits = []
    for i in range(1, L.n + 1):
        arc = L.arc(i)
        for k in _sheets(p, arc, L.period):
            for seg, t, _ in crossing_points(p, arc.shifted(k * L.period)):
                hits.append((seg, t, i))
    hits.sort()
    return [i for _, _, i in hits]
