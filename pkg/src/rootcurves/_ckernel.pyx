# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled segment crossing kernel.

Same interface as ``_pykernel.segment_crossings``.  Coordinates must fit in
``COORD_LIMIT`` so that orientation products stay inside 64-bit integers.
"""
from libc.stdlib cimport malloc, free

COORD_LIMIT = 1 << 30


cdef inline int _sign(long long v) nogil:
    return (v > 0) - (v < 0)


cdef inline int _orient(long long ax, long long ay, long long bx, long long by,
                        long long cx, long long cy) nogil:
    return _sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


cdef long long* _load(object flat, Py_ssize_t* npts) except NULL:
    cdef Py_ssize_t m = len(flat)
    cdef long long* buf = <long long*> malloc(max(m, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(m):
        v = flat[k]
        if v >= COORD_LIMIT or v <= -COORD_LIMIT:
            free(buf)
            raise OverflowError("coordinate outside the compiled kernel range")
        buf[k] = v
    npts[0] = m // 2
    return buf


def segment_crossings(a, b=None):
    cdef Py_ssize_t na, nb, i, j
    cdef long long *pa
    cdef long long *pb
    cdef long long ax, ay, bx, by, cx, cy, dx, dy
    cdef long long lox, hix, loy, hiy
    cdef int o1, o2, o3, o4
    cdef bint same = b is None
    cdef long long count = 0
    contacts = []
    pa = _load(a, &na)
    if same:
        pb = pa
        nb = na
    else:
        try:
            pb = _load(b, &nb)
        except BaseException:
            free(pa)
            raise
    try:
        for i in range(na - 1):
            ax = pa[2 * i]; ay = pa[2 * i + 1]; bx = pa[2 * i + 2]; by = pa[2 * i + 3]
            lox = ax if ax < bx else bx
            hix = bx if ax < bx else ax
            loy = ay if ay < by else by
            hiy = by if ay < by else ay
            for j in range(nb - 1):
                if same and j <= i + 1:
                    continue
                cx = pb[2 * j]; cy = pb[2 * j + 1]; dx = pb[2 * j + 2]; dy = pb[2 * j + 3]
                if (cx > hix and dx > hix) or (cx < lox and dx < lox):
                    continue
                if (cy > hiy and dy > hiy) or (cy < loy and dy < loy):
                    continue
                o1 = _orient(ax, ay, bx, by, cx, cy)
                o2 = _orient(ax, ay, bx, by, dx, dy)
                o3 = _orient(cx, cy, dx, dy, ax, ay)
                o4 = _orient(cx, cy, dx, dy, bx, by)
                if o1 * o2 < 0 and o3 * o4 < 0:
                    count += 1
                elif o1 * o2 <= 0 and o3 * o4 <= 0:
                    contacts.append((i, j))
    finally:
        if not same:
            free(pb)
        free(pa)
    return int(count), contacts
