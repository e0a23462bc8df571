"""Canonical plane curves F(alpha) and the maps R and S.

A plane curve starts at a marked point p_k and ends at the basepoint B.  We
record the rays it meets in order.  Each crossing also carries its direction
(+1 rightward, -1 leftward) and the part of the canonical drawing it belongs
to.  Directions and roles do not change R or S.  The geometry layer uses them
to place the crossings.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .root_system import (
    ReflectionWord,
    Root,
    SchurLeft,
    SchurRight,
    Type1,
    Type2,
    apply_word,
    classify,
    is_positive_real,
    plateau,
)

RIGHT = 1
LEFT = -1

# roles
SPIRAL = "spiral"
HOOK = "hook"                # type 1 closing pass
HOOK_LEFT = "hook_left"      # type 2 opening pass over rays 2..a
HOOK_RIGHT = "hook_right"    # type 2 opening pass over rays a+b+1..n
HOOK_BACK = "hook_back"      # type 2 return pass over rays n-1..a+b+1
STREAM = "stream"            # Schur curves


@dataclass(frozen=True)
class Crossing:
    ray: int
    direction: int = LEFT
    role: str = STREAM
    loop: int = 0


@dataclass(frozen=True)
class PlaneCurve:
    """Curve from p_start to B, meeting rays in the order of ``steps``."""

    n: int
    start: int
    steps: tuple[Crossing, ...] = ()
    family: Optional[str] = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if not 1 <= self.start <= self.n:
            raise ValueError(f"start {self.start} outside 1..{self.n}")
        steps = tuple(s if isinstance(s, Crossing) else Crossing(int(s)) for s in self.steps)
        for s in steps:
            if not 1 <= s.ray <= self.n:
                raise ValueError(f"ray {s.ray} outside 1..{self.n}")
        object.__setattr__(self, "steps", steps)

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(s.ray for s in self.steps)

    @classmethod
    def from_crossings(cls, n: int, start: int, crossings: Sequence[int]) -> "PlaneCurve":
        return cls(n, start, tuple(Crossing(int(x)) for x in crossings))


def S(c: PlaneCurve) -> ReflectionWord:
    """Reflection word of a curve: crossings reversed, base = start."""
    return ReflectionWord(c.n, c.start, tuple(reversed(c.crossings)))


def R(c: PlaneCurve) -> Root:
    return apply_word(S(c))


def _check_type(n: int, m: int, a: int, b: int, c: int) -> None:
    if n < 3 or m < 0 or a < 1 or b < 1 or c < 1 or a + b + c != n:
        raise ValueError(f"invalid shape n={n} m={m} a={a} b={b} c={c}")


def build_type1(n: int, m: int, a: int, b: int, c: int) -> PlaneCurve:
    """Type 1: m inward loops from p_{a+b}, then a leftward pass to B."""
    _check_type(n, m, a, b, c)
    s = a + b
    steps: list[Crossing] = []
    for k in range(1, m + 1):
        steps += [Crossing(x, RIGHT, SPIRAL, k) for x in range(s + 1, n)]
        steps += [Crossing(x, LEFT, SPIRAL, k) for x in range(n, 0, -1)]
        steps += [Crossing(x, RIGHT, SPIRAL, k) for x in range(2, s + 1)]
    steps += [Crossing(x, LEFT, HOOK, 0) for x in range(s - 1, a, -1)]
    return PlaneCurve(n, s, tuple(steps), "type1")


def build_type2(n: int, m: int, a: int, b: int, c: int) -> PlaneCurve:
    """Type 2: a hook from p_1 around the right end, then m outward loops."""
    _check_type(n, m, a, b, c)
    s = a + b
    steps = [Crossing(x, RIGHT, HOOK_LEFT, 0) for x in range(2, a + 1)]
    steps += [Crossing(x, RIGHT, HOOK_RIGHT, 0) for x in range(s + 1, n + 1)]
    steps += [Crossing(x, LEFT, HOOK_BACK, 0) for x in range(n - 1, s, -1)]
    for k in range(1, m + 1):
        steps += [Crossing(x, RIGHT, SPIRAL, k) for x in range(1, s + 1)]
        steps += [Crossing(x, LEFT, SPIRAL, k) for x in range(s - 1, 0, -1)]
        steps += [Crossing(x, RIGHT, SPIRAL, k) for x in range(s + 1, n + 1)]
        steps += [Crossing(x, LEFT, SPIRAL, k) for x in range(n - 1, s, -1)]
    return PlaneCurve(n, 1, tuple(steps), "type2")


def schur_stream(n: int, m: int, a: int) -> list[int]:
    """Right-to-left index stream of the unshifted Schur curve.

    Position 0 is the base a, followed by a-1, ..., 1 and then m copies of
    n, ..., 1.
    """
    if n < 3 or not 1 <= a < n or m < 0:
        raise ValueError(f"invalid Schur shape n={n} m={m} a={a}")
    stream = [a] + list(range(a - 1, 0, -1))
    for _ in range(m):
        stream += list(range(n, 0, -1))
    return stream


def build_schur(n: int, m: int, a: int) -> PlaneCurve:
    """Schur curve for ((m+1)^a, m^b): drop the first m stream entries."""
    stream = schur_stream(n, m, a)[m:]
    steps = tuple(Crossing(x, LEFT, STREAM, 0) for x in stream[1:])
    return PlaneCurve(n, stream[0], steps, "schur_left")


def mirror(c: PlaneCurve) -> PlaneCurve:
    """Reflect in the vertical line through B: k <-> n+1-k, directions flip."""
    n = c.n
    fam = {"schur_left": "schur_right", "schur_right": "schur_left"}.get(c.family or "", c.family)
    steps = tuple(Crossing(n + 1 - s.ray, -s.direction, s.role, s.loop) for s in c.steps)
    return PlaneCurve(n, n + 1 - c.start, steps, fam)


def build_schur_mirror(n: int, m: int, a: int) -> PlaneCurve:
    """Mirror image of build_schur; realizes (m^b, (m+1)^a)."""
    return mirror(build_schur(n, m, a))


def build_F(alpha: Sequence[int]) -> PlaneCurve:
    cls = classify(alpha)
    if isinstance(cls, Type1):
        return build_type1(cls.n, cls.m, cls.a, cls.b, cls.c)
    if isinstance(cls, Type2):
        return build_type2(cls.n, cls.m, cls.a, cls.b, cls.c)
    if isinstance(cls, SchurLeft):
        return build_schur(cls.n, cls.m, cls.a)
    if isinstance(cls, SchurRight):
        return build_schur_mirror(cls.n, cls.m, cls.a)
    raise ValueError(f"{list(alpha)} is not a positive real root ({cls.tag})")


@dataclass(frozen=True)
class SpiralDecompositionP:
    """Split of a canonical curve into m spirals and a hook.

    ``spiral`` and ``hook`` are half-open ranges of crossing offsets and
    ``anchor`` is the offset of the split point w (w_1 for type 2 and Schur).
    Schur curves are decomposed before the start is shifted: offsets refer to
    the unshifted crossing list, which starts at p_a and has ``shift`` = m
    more entries than the built curve.
    """

    m: int
    kind: str
    spiral: tuple[int, int]
    hook: tuple[int, int]
    anchor: Optional[int]
    shift: int = 0


def spiral_decompose(c: PlaneCurve) -> SpiralDecompositionP:
    alpha = R(c)
    cls = classify(alpha)
    if not is_positive_real(cls):
        raise ValueError("curve does not represent a positive real root")
    canon = build_F(alpha)
    if (canon.start, canon.crossings) != (c.start, c.crossings):
        raise ValueError("curve is not the canonical curve of its root")
    m = plateau(alpha)
    total = len(c.steps)
    n = c.n
    if isinstance(cls, Type1):
        w = m * (2 * n - 2)
        return SpiralDecompositionP(m, cls.tag, (0, w), (w, total), w)
    if isinstance(cls, Type2):
        w = cls.a + 2 * cls.c - 2
        return SpiralDecompositionP(m, cls.tag, (w, total), (0, w), w)
    # unshifted curve: a-1 crossings down to r_1, then m full turns
    w = cls.a - 1
    anchor = cls.a - 2 if cls.a > 1 else None
    return SpiralDecompositionP(m, cls.tag, (w, w + m * n), (0, w), anchor, shift=m)
