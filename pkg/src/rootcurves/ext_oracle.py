"""Ext groups of string modules over the path algebra of A~(n-1,1).

The quiver has arrows i -> i+1 for 1 <= i < n and one arrow 1 -> n.  The
module M_alpha of a positive real root is the string module read off the
arc crossings of its annulus curve.  Hom spaces come from an exact linear
solve and Ext^1 from the Euler form, which is valid because kQ is
hereditary.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .annulus import build_gamma
from .geom_oracle import AnnulusLayout, arc_sequence, realize_annulus
from .root_system import Root, classify, is_positive_real

Arrow = tuple[int, int]


def arrows(n: int) -> list[Arrow]:
    """Arrows as (source, target); the last one is 1 -> n."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return [(i, i + 1) for i in range(1, n)] + [(1, n)]


def _arrow_between(n: int, u: int, v: int) -> tuple[int, bool]:
    """Index of the arrow joining u and v, and whether it points u -> v."""
    for k, (s, t) in enumerate(arrows(n)):
        if (s, t) == (u, v):
            return k, True
        if (s, t) == (v, u):
            return k, False
    raise ValueError(f"no arrow joins {u} and {v}")


@dataclass(frozen=True)
class StringWord:
    """Walk v_0..v_L in the quiver.

    ``steps[p]`` is (arrow index, forward) for the move from v_p to v_{p+1}.
    """

    n: int
    vertices: tuple[int, ...]
    steps: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if not self.vertices:
            raise ValueError("a walk needs at least one vertex")
        if any(not 1 <= v <= self.n for v in self.vertices):
            raise ValueError("walk vertex outside 1..n")
        if not self.steps:
            steps = tuple(_arrow_between(self.n, u, v) for u, v in zip(self.vertices, self.vertices[1:]))
            object.__setattr__(self, "steps", steps)
        if len(self.steps) != len(self.vertices) - 1:
            raise ValueError("walk has the wrong number of steps")
        ars = arrows(self.n)
        for p, (k, fwd) in enumerate(self.steps):
            s, t = ars[k]
            if (self.vertices[p], self.vertices[p + 1]) != ((s, t) if fwd else (t, s)):
                raise ValueError(f"step {p} does not follow its arrow")
        for p in range(len(self.steps) - 1):
            (k1, f1), (k2, f2) = self.steps[p], self.steps[p + 1]
            if k1 == k2 and f1 != f2:
                raise ValueError(f"walk backtracks at position {p + 1}")

    def dimension_vector(self) -> Root:
        dims = [0] * self.n
        for v in self.vertices:
            dims[v - 1] += 1
        return Root(dims)


def string_word(alpha: Sequence[int]) -> StringWord:
    """String of M_alpha from the order in which gamma_alpha meets the arcs."""
    cls = classify(alpha)
    if not is_positive_real(cls):
        raise ValueError(f"{list(alpha)} is not a positive real root ({cls.tag})")
    g = build_gamma(alpha)
    L = AnnulusLayout.default(g.n)
    w = StringWord(g.n, tuple(arc_sequence(realize_annulus(g, L), L)))
    if w.dimension_vector() != Root(alpha):
        raise ValueError("arc crossings do not reproduce the root")
    return w


@dataclass(frozen=True)
class QuiverRep:
    """Vector spaces per vertex and one matrix per arrow.

    ``maps[k]`` has shape dims[target] x dims[source] and is stored as a
    tuple of rows.
    """

    n: int
    dims: tuple[int, ...]
    maps: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self) -> None:
        ars = arrows(self.n)
        if len(self.dims) != self.n or len(self.maps) != len(ars):
            raise ValueError("representation does not match the quiver")
        for (s, t), mat in zip(ars, self.maps):
            if len(mat) != self.dims[t - 1] or any(len(r) != self.dims[s - 1] for r in mat):
                raise ValueError(f"map for arrow {s}->{t} has the wrong shape")


def rep_from_string(w: StringWord) -> QuiverRep:
    n = w.n
    ars = arrows(n)
    # basis vector p sits at vertex v_p; index it inside that vertex's space
    local = []
    seen = [0] * n
    for v in w.vertices:
        local.append(seen[v - 1])
        seen[v - 1] += 1
    mats = [[[Fraction(0)] * seen[s - 1] for _ in range(seen[t - 1])] for s, t in ars]
    for p, (k, fwd) in enumerate(w.steps):
        src, dst = (p, p + 1) if fwd else (p + 1, p)
        mats[k][local[dst]][local[src]] = Fraction(1)
    return QuiverRep(n, tuple(seen), tuple(tuple(tuple(r) for r in m) for m in mats))


def _rank(rows: list[dict[int, Fraction]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = 1 / row[col]
                pivots[col] = {c: v * inv for c, v in row.items()}
                rank += 1
                break
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return rank


def hom_dim(M: QuiverRep, N: QuiverRep) -> int:
    """dim Hom(M, N): solutions of f_t M_a = N_a f_s over all arrows."""
    if M.n != N.n:
        raise ValueError("representations of different quivers")
    n = M.n
    # unknown f_i[r][c] with r < N.dims[i], c < M.dims[i]
    offset = [0] * (n + 1)
    for i in range(n):
        offset[i + 1] = offset[i] + N.dims[i] * M.dims[i]

    def var(i: int, r: int, c: int) -> int:
        return offset[i - 1] + r * M.dims[i - 1] + c

    rows: list[dict[int, Fraction]] = []
    for (s, t), Ma, Na in zip(arrows(n), M.maps, N.maps):
        # entry (r, c) of f_t Ma - Na f_s, shape N.dims[t] x M.dims[s]
        for r in range(N.dims[t - 1]):
            for c in range(M.dims[s - 1]):
                eq: dict[int, Fraction] = {}
                for k in range(M.dims[t - 1]):
                    if Ma[k][c]:
                        j = var(t, r, k)
                        eq[j] = eq.get(j, 0) + Ma[k][c]
                for k in range(N.dims[s - 1]):
                    if Na[r][k]:
                        j = var(s, k, c)
                        eq[j] = eq.get(j, 0) - Na[r][k]
                if eq:
                    rows.append(eq)
    return offset[n] - _rank(rows)


def euler_form(alpha: Sequence[int], beta: Sequence[int]) -> int:
    if len(alpha) != len(beta):
        raise ValueError("vectors of different lengths")
    a, b = list(alpha), list(beta)
    n = len(a)
    return (sum(x * y for x, y in zip(a, b))
            - sum(a[i] * b[i + 1] for i in range(n - 1))
            - a[0] * b[n - 1])


@lru_cache(maxsize=4096)
def _module(alpha: tuple[int, ...]) -> QuiverRep:
    return rep_from_string(string_word(alpha))


def ext_dim_kq(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """dim Ext^1(M_alpha, M_beta) = dim Hom - <alpha, beta>."""
    a, b = tuple(alpha), tuple(beta)
    val = hom_dim(_module(a), _module(b)) - euler_form(a, b)
    if val < 0:
        raise ArithmeticError(f"negative Ext dimension for {a}, {b}")
    return val


def ext_dim_cluster(alpha: Sequence[int], beta: Sequence[int]) -> int:
    return ext_dim_kq(alpha, beta) + ext_dim_kq(beta, alpha)
