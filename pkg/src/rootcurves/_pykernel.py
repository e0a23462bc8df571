"""Pure-Python segment crossing kernel.

Polylines arrive as flat integer lists ``[x0, y0, x1, y1, ...]``.  Integers
are exact, so every predicate is exact.  The compiled kernel in
``_ckernel.pyx`` has the same interface.
"""
from __future__ import annotations

import bisect
from typing import Optional, Sequence


def _segments(flat: Sequence[int]) -> list[tuple[int, int, int, int]]:
    pts = list(zip(flat[0::2], flat[1::2]))
    return [(pts[i][0], pts[i][1], pts[i + 1][0], pts[i + 1][1]) for i in range(len(pts) - 1)]


def _orient(ax: int, ay: int, bx: int, by: int, cx: int, cy: int) -> int:
    d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (d > 0) - (d < 0)


def segment_crossings(
    a: Sequence[int], b: Optional[Sequence[int]] = None
) -> tuple[int, list[tuple[int, int]]]:
    """Count proper crossings between segments of two polylines.

    With ``b`` None the polyline is tested against itself, skipping
    neighbouring segments.  Returns the count and the index pairs of segments
    that touch without crossing properly (endpoint contact or collinear
    overlap).  The caller decides whether those contacts are allowed.
    """
    sa = _segments(a)
    same = b is None
    sb = sa if same else _segments(b)
    # sort b's segments by left x so each a segment scans a short window
    order = sorted(range(len(sb)), key=lambda j: min(sb[j][0], sb[j][2]))
    lefts = [min(sb[j][0], sb[j][2]) for j in order]
    count = 0
    contacts: list[tuple[int, int]] = []
    for i, (ax, ay, bx, by) in enumerate(sa):
        lo_x, hi_x = min(ax, bx), max(ax, bx)
        lo_y, hi_y = min(ay, by), max(ay, by)
        stop = bisect.bisect_right(lefts, hi_x)
        for idx in range(stop):
            j = order[idx]
            if same and j <= i + 1:
                continue
            cx, cy, dx, dy = sb[j]
            if max(cx, dx) < lo_x:
                continue
            if max(cy, dy) < lo_y or min(cy, dy) > hi_y:
                continue
            o1 = _orient(ax, ay, bx, by, cx, cy)
            o2 = _orient(ax, ay, bx, by, dx, dy)
            o3 = _orient(cx, cy, dx, dy, ax, ay)
            o4 = _orient(cx, cy, dx, dy, bx, by)
            if o1 * o2 < 0 and o3 * o4 < 0:
                count += 1
            elif o1 * o2 <= 0 and o3 * o4 <= 0:
                # touching, or collinear with overlapping bounding boxes
                contacts.append((i, j))
    return count, contacts
