"""Curves on the annulus with n-1 outer marked points and one inner point.

The outer boundary carries M_1..M_{n-1} and the inner boundary carries M_n.
The triangulation arcs l_1..l_n join M_n to the outer points.  A positive
real root alpha has one curve gamma_alpha.  Its crossing counts with the
arcs form alpha.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .geom_oracle import (
    AnnulusLayout,
    annulus_crossings,
    annulus_self_crossings,
    arc_crossings,
    realize_annulus,
    realize_annulus_many,
)
from .root_system import (
    Root,
    SchurLeft,
    SchurRight,
    Type1,
    Type2,
    classify,
    is_positive_real,
)


class _Unsupported:
    """Marker for pairs outside the hypotheses of the intersection formula."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unsupported"

    def __str__(self) -> str:
        return "unsupported"

    def __bool__(self) -> bool:
        return False


Unsupported = _Unsupported()
IntOrUnsupported = Union[int, _Unsupported]


@dataclass(frozen=True)
class AnnulusCurve:
    """Start and end marked points plus the number of turns.

    Curves of kind ``schur_right`` turn clockwise; all others turn
    counter-clockwise.  ``spiral_arc`` is the arc that the turns cross m
    times.
    """

    n: int
    kind: str
    start: int
    end: int
    winding: int
    spiral_arc: int
    root: Root

    def __post_init__(self) -> None:
        if not (1 <= self.start <= self.n and 1 <= self.end <= self.n):
            raise ValueError("marked point index out of range")
        if self.winding < 0:
            raise ValueError("winding must be non-negative")


def build_gamma(alpha: Sequence[int]) -> AnnulusCurve:
    cls = classify(alpha)
    root = Root(alpha)
    n = len(root)
    if isinstance(cls, Type1):
        end = cls.a + cls.b + 1
        end = 1 if end == n else end
        return AnnulusCurve(n, cls.tag, cls.a, end, cls.m, cls.a, root)
    if isinstance(cls, Type2):
        return AnnulusCurve(n, cls.tag, cls.a + cls.b, cls.a + 1, cls.m, cls.a + cls.b, root)
    if isinstance(cls, SchurLeft):
        end = 1 if cls.a + 1 == n else cls.a + 1
        return AnnulusCurve(n, cls.tag, n, end, cls.m, n, root)
    if isinstance(cls, SchurRight):
        return AnnulusCurve(n, cls.tag, n, cls.b, cls.m, 1, root)
    raise ValueError(f"{list(alpha)} is not a positive real root ({cls.tag})")


def dimension_vector(g: AnnulusCurve, layout=None) -> Root:
    """Crossings of the drawn curve with each arc l_i."""
    L = layout or AnnulusLayout.default(g.n)
    return Root(arc_crossings(realize_annulus(g, L), L))


def self_int_annulus(g: AnnulusCurve) -> int:
    """Self-intersections read off the spiral decomposition.

    A type 1 or type 2 curve crosses itself once per full turn.  A Schur
    curve runs from the inner point to the outer boundary as a simple arc,
    however often it turns, so it never crosses itself.
    """
    if g.kind in ("schur_left", "schur_right"):
        return 0
    return g.winding


def _shape(cls) -> tuple:
    return tuple(getattr(cls, k) for k in ("a", "b", "c") if hasattr(cls, k))


def int_annulus(g1: AnnulusCurve, g2: AnnulusCurve) -> IntOrUnsupported:
    """Intersection number from the spiral decomposition.

    Pairs of the same class and shape whose roots differ by a constant
    vector lam*(1,...,1) are covered: 2m for type 1 and type 2, where m is
    the smaller plateau, and max(lam-1, 0) for Schur pairs with lam < n.
    Every other pair returns Unsupported.
    """
    if g1.n != g2.n:
        raise ValueError("curves live on different annuli")
    c1, c2 = classify(g1.root), classify(g2.root)
    if not (is_positive_real(c1) and is_positive_real(c2)):
        return Unsupported
    if type(c1) is not type(c2) or _shape(c1) != _shape(c2):
        return Unsupported
    lam = abs(c1.m - c2.m)
    if isinstance(c1, (Type1, Type2)):
        return 2 * min(c1.m, c2.m)
    if lam >= g1.n:
        return Unsupported
    return max(lam - 1, 0)


def annulus_geometric_pair(g1: AnnulusCurve, g2: AnnulusCurve, layout=None) -> int:
    """Crossing count of the drawn curves, summed over the universal cover."""
    L = layout or AnnulusLayout.default(g1.n)
    p, q = realize_annulus_many([g1, g2], L)
    return annulus_crossings(p, q, L.period)


def annulus_geometric_self(g: AnnulusCurve, layout=None) -> int:
    L = layout or AnnulusLayout.default(g.n)
    return annulus_self_crossings(realize_annulus(g, L), L.period)


def theorem_covered(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return int_annulus(build_gamma(alpha), build_gamma(beta)) is not Unsupported


def formula_value(alpha: Sequence[int], beta: Sequence[int]) -> Optional[int]:
    v = int_annulus(build_gamma(alpha), build_gamma(beta))
    return None if v is Unsupported else v
