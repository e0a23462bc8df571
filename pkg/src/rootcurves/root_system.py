"""Roots of the affine system of type A~(n-1,1).

Vertices are numbered 1..n around a cycle.  A root is stored as an integer
vector indexed from 1, with cyclic neighbours ``i-1`` and ``i+1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union


class Root(tuple):
    """Integer vector of length n >= 3, read with 1-based cyclic indices."""

    def __new__(cls, components: Iterable[int]) -> "Root":
        comps = tuple(int(x) for x in components)
        if len(comps) < 3:
            raise ValueError(f"a root needs n >= 3 components, got {len(comps)}")
        return super().__new__(cls, comps)

    @property
    def n(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        """Component i with cyclic wraparound (0 -> n, n+1 -> 1)."""
        return self[(i - 1) % len(self)]

    def __repr__(self) -> str:
        return f"Root({list(self)})"


def simple_root(n: int, k: int) -> Root:
    """The simple root alpha_k."""
    if not 1 <= k <= n:
        raise ValueError(f"simple root index {k} outside 1..{n}")
    v = [0] * n
    v[k - 1] = 1
    return Root(v)


def simple_reflect(i: int, v: Sequence[int]) -> Root:
    """Apply s_i: component i becomes v[i-1] + v[i+1] - v[i]."""
    v = Root(v)
    n = len(v)
    if not 1 <= i <= n:
        raise ValueError(f"reflection index {i} outside 1..{n}")
    out = list(v)
    out[i - 1] = v.at(i - 1) + v.at(i + 1) - v.at(i)
    return Root(out)


@dataclass(frozen=True)
class ReflectionWord:
    """s_{letters[0]} ... s_{letters[-1]} applied to alpha_base.

    The rightmost letter acts first.
    """

    n: int
    base: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 3:
            raise ValueError("n must be at least 3")
        for k in (self.base, *self.letters):
            if not 1 <= k <= self.n:
                raise ValueError(f"index {k} outside 1..{self.n}")

    def __len__(self) -> int:
        return len(self.letters)


def apply_word(w: ReflectionWord) -> Root:
    v = simple_root(w.n, w.base)
    for i in reversed(w.letters):
        v = simple_reflect(i, v)
    return v


# Root classes. Each real variant can rebuild its vector.

@dataclass(frozen=True)
class Type1:
    """(m^a, (m+1)^b, m^c) with a, c >= 1."""
    n: int
    m: int
    a: int
    b: int
    c: int
    tag = "type1"

    def vector(self) -> Root:
        m = self.m
        return Root([m] * self.a + [m + 1] * self.b + [m] * self.c)


@dataclass(frozen=True)
class Type2:
    """((m+1)^a, m^b, (m+1)^c) with a, c >= 1."""
    n: int
    m: int
    a: int
    b: int
    c: int
    tag = "type2"

    def vector(self) -> Root:
        m = self.m
        return Root([m + 1] * self.a + [m] * self.b + [m + 1] * self.c)


@dataclass(frozen=True)
class SchurLeft:
    """((m+1)^a, m^b)."""
    n: int
    m: int
    a: int
    b: int
    tag = "schur_left"

    def vector(self) -> Root:
        return Root([self.m + 1] * self.a + [self.m] * self.b)


@dataclass(frozen=True)
class SchurRight:
    """(m^b, (m+1)^a)."""
    n: int
    m: int
    a: int
    b: int
    tag = "schur_right"

    def vector(self) -> Root:
        return Root([self.m] * self.b + [self.m + 1] * self.a)


@dataclass(frozen=True)
class Imaginary:
    n: int
    lam: int
    tag = "imaginary"

    def vector(self) -> Root:
        return Root([self.lam] * self.n)


@dataclass(frozen=True)
class NegativeReal:
    n: int
    tag = "negative_real"


@dataclass(frozen=True)
class NotARoot:
    n: int
    tag = "not_a_root"


RealClass = Union[Type1, Type2, SchurLeft, SchurRight]
RootClass = Union[Type1, Type2, SchurLeft, SchurRight, Imaginary, NegativeReal, NotARoot]
REAL_CLASSES = (Type1, Type2, SchurLeft, SchurRight)


def class_dict(cls: RootClass) -> dict:
    """JSON-friendly view: tag first, then whichever of m, a, b, c apply."""
    out: dict = {"tag": cls.tag}
    for key in ("m", "a", "b", "c"):
        if hasattr(cls, key):
            out[key] = getattr(cls, key)
    if isinstance(cls, Imaginary):
        out["lambda"] = cls.lam
    return out


def _real_form(v: Root) -> RealClass | None:
    n = len(v)
    lo, hi = min(v), max(v)
    if lo < 0 or hi != lo + 1:
        return None
    high = [x == hi for x in v]
    # the high entries must form one cyclic block
    starts = [i for i in range(n) if high[i] and not high[i - 1]]
    if len(starts) != 1:
        return None
    s = starts[0]
    length = sum(high)
    if s == 0:
        return SchurLeft(n, lo, length, n - length)
    if s + length == n:
        return SchurRight(n, lo, length, n - length)
    if s + length < n:
        return Type1(n, lo, s, length, n - s - length)
    # block wraps past n back to 1: the low entries sit in the middle
    low_start = (s + length) % n
    b = n - length
    return Type2(n, lo, low_start, b, n - low_start - b)


def classify(v: Sequence[int]) -> RootClass:
    """Canonical class of v.

    Precedence for ambiguous shapes is Imaginary, SchurLeft, SchurRight,
    Type1, Type2; negatives of real forms give NegativeReal.
    """
    v = Root(v)
    n = len(v)
    if len(set(v)) == 1:
        lam = v[0]
        return Imaginary(n, lam) if lam > 0 else NotARoot(n)
    found = _real_form(v)
    if found is not None:
        return found
    if _real_form(Root(-x for x in v)) is not None:
        return NegativeReal(n)
    return NotARoot(n)


def is_positive_real(cls: RootClass) -> bool:
    return isinstance(cls, REAL_CLASSES)


def plateau(v: Sequence[int]) -> int:
    """Plateau level m: the minimum component."""
    return min(v)


def iter_real_classes(n: int, m: int) -> Iterator[RealClass]:
    """Every positive real class with plateau m, in a fixed order."""
    for a in range(1, n):
        for c in range(1, n - a):
            yield Type1(n, m, a, n - a - c, c)
    for a in range(1, n):
        for c in range(1, n - a):
            yield Type2(n, m, a, n - a - c, c)
    for a in range(1, n):
        yield SchurLeft(n, m, a, n - a)
    for a in range(1, n):
        yield SchurRight(n, m, a, n - a)


def enumerate_positive_real(n: int, m_max: int) -> list[tuple[Root, RealClass]]:
    if n < 3:
        raise ValueError("n must be at least 3")
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    return [(cls.vector(), cls) for m in range(m_max + 1) for cls in iter_real_classes(n, m)]
