"""Acceptance suite: one check per criterion, each at exact tolerance.

Every check returns a pass flag and a one-line summary.  ``test_report``
prints one PASS/FAIL line per criterion to the terminal.  Run this file
directly to get the same report without pytest.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import pytest

from rootcurves import geom_oracle as geo
from rootcurves.annulus import (
    annulus_geometric_pair,
    annulus_geometric_self,
    build_gamma,
    dimension_vector,
    int_annulus,
    self_int_annulus,
    Unsupported,
)
from rootcurves.cli import decode_curve, decode_root, decode_word, encode_curve, encode_root, encode_word
from rootcurves.ext_oracle import ext_dim_cluster, ext_dim_kq
from rootcurves.root_system import (
    NotARoot,
    ReflectionWord,
    Root,
    apply_word,
    classify,
    enumerate_positive_real,
    plateau,
    simple_reflect,
)
from rootcurves.word_builder import R, S, build_F, build_schur

N_RANGE = range(3, 7)
M_MAX = 4
LAMBDA_MAX = 4


@dataclass(frozen=True)
class Outcome:
    passed: bool
    detail: str


def sweep_roots():
    for n in N_RANGE:
        yield from enumerate_positive_real(n, M_MAX)


def shifted(v, lam: int) -> Root:
    return Root(x + lam for x in v)


def pair_values(v, w) -> tuple:
    ga, gb = build_gamma(v), build_gamma(w)
    return (
        int_annulus(ga, gb),
        geo.plane_pair_count(build_F(v), build_F(w)),
        annulus_geometric_pair(ga, gb),
        ext_dim_cluster(v, w),
    )


@lru_cache(maxsize=None)
def criterion_1() -> Outcome:
    bad = []
    total = 0
    for v, _ in sweep_roots():
        total += 1
        if R(build_F(v)) != v or dimension_vector(build_gamma(v)) != v:
            bad.append(tuple(v))
    return Outcome(not bad, f"{total} roots, {len(bad)} mismatches {bad[:3]}")


@lru_cache(maxsize=None)
def self_chain() -> list[tuple]:
    rows = []
    for v, cls in sweep_roots():
        rows.append((
            tuple(v), cls.tag, plateau(v),
            geo.plane_self_count(build_F(v)),
            self_int_annulus(build_gamma(v)),
            annulus_geometric_self(build_gamma(v)),
            ext_dim_kq(v, v),
        ))
    return rows


@lru_cache(maxsize=None)
def criterion_2() -> Outcome:
    """The literal chain: plane == annulus == Ext == plateau m."""
    rows = self_chain()
    bad = [r for r in rows if not (r[3] == r[4] == r[5] == r[6] == r[2])]
    tags = sorted({r[1] for r in bad})
    oracles_agree = all(r[3] == r[4] == r[5] == r[6] for r in rows)
    detail = (f"{len(rows)} roots, {len(bad)} differ from plateau m (classes {tags}); "
              f"the three oracles agree on every root: {oracles_agree}")
    if bad:
        r = bad[0]
        detail += f"; e.g. {list(r[0])}: plane {r[3]}, annulus {r[4]}, Ext {r[6]}, m {r[2]}"
    return Outcome(not bad, detail)


def _covered(kinds: tuple[str, ...], lam_max) -> list[tuple]:
    out = []
    for n in N_RANGE:
        for v, cls in enumerate_positive_real(n, M_MAX):
            if cls.tag not in kinds:
                continue
            for lam in range(lam_max(n) + 1):
                out.append((v, shifted(v, lam), lam, cls))
    return out


@lru_cache(maxsize=None)
def criterion_3() -> Outcome:
    pairs = _covered(("type1", "type2"), lambda n: LAMBDA_MAX)
    bad = []
    for v, w, lam, cls in pairs:
        vals = pair_values(v, w)
        if vals != (2 * cls.m,) * 4:
            bad.append((tuple(v), lam, vals))
    return Outcome(not bad, f"{len(pairs)} type 1/2 pairs with lambda 0..{LAMBDA_MAX}, {len(bad)} failures {bad[:2]}")


@lru_cache(maxsize=None)
def criterion_4() -> Outcome:
    pairs = _covered(("schur_left", "schur_right"), lambda n: n - 1)
    bad = []
    by_family = {"schur_left": 0, "schur_right": 0}
    for v, w, lam, cls in pairs:
        vals = pair_values(v, w)
        by_family[cls.tag] += 1
        if vals != (max(lam - 1, 0),) * 4:
            bad.append((tuple(v), lam, vals))
    # the mirrored family must give the same values as its left partner
    mirror_bad = 0
    for v, w, lam, cls in pairs:
        if cls.tag == "schur_left":
            if pair_values(Root(reversed(v)), Root(reversed(w))) != pair_values(v, w):
                mirror_bad += 1
    ok = not bad and not mirror_bad
    return Outcome(ok, f"{len(pairs)} Schur pairs {by_family}, {len(bad)} failures {bad[:2]}, "
                       f"{mirror_bad} mirror mismatches")


SCHUR_TABLE = {
    (1, 1, 0, 0): (2, (1,)),
    (2, 2, 1, 1): (1, (1, 2, 3, 4)),
    (3, 3, 2, 2): (4, (1, 2, 3, 4, 1, 2, 3)),
    (4, 4, 3, 3): (3, (1, 2, 3, 4, 1, 2, 3, 4, 1, 2)),
}


@lru_cache(maxsize=None)
def criterion_5() -> Outcome:
    g121 = annulus_geometric_pair(build_gamma((1, 2, 1)), build_gamma((3, 4, 3)))
    f121 = geo.plane_pair_count(build_F((1, 2, 1)), build_F((2, 3, 2)))
    table = {}
    for m in range(4):
        c = build_schur(4, m, 2)
        w = S(c)
        table[tuple(apply_word(w))] = (w.base, w.letters)
    ok = g121 == 2 and f121 == 2 and table == SCHUR_TABLE
    return Outcome(ok, f"Int(gamma_121, gamma_343) = {g121}, Int(F(121), F(232)) = {f121}, "
                       f"Schur table n=4 a=2 matches: {table == SCHUR_TABLE}")


def _random_layouts(rng: random.Random, count: int):
    out = []
    while len(out) < count:
        n = rng.randint(3, 5)
        xs = sorted({Fraction(rng.randint(1, 60), rng.randint(1, 4)) for _ in range(n)})
        ox = sorted({Fraction(rng.randint(1, 39), 4) for _ in range(n - 1)})
        if len(xs) < n or len(ox) < n - 1:
            continue
        plane = geo.Layout(tuple(xs), mark_y=Fraction(rng.randint(1, 9), rng.randint(1, 4)),
                           base=(Fraction(rng.randint(-30, 90), 3), 0),
                           delta=Fraction(1, 4 * (M_MAX + 2) * rng.randint(1, 3)))
        ann = geo.AnnulusLayout(Fraction(10), tuple(ox), inner=Fraction(rng.randint(0, 2)),
                                outer=Fraction(rng.randint(3, 7)))
        out.append((n, plane, ann))
    return out


@lru_cache(maxsize=None)
def criterion_6() -> Outcome:
    rng = random.Random(20240601)
    notes = []
    # reflection involution
    inv_ok = True
    for _ in range(2000):
        n = rng.randint(3, 8)
        v = Root(rng.randint(-6, 6) for _ in range(n))
        i = rng.randint(1, n)
        inv_ok &= simple_reflect(i, simple_reflect(i, v)) == v
    notes.append(f"involution {inv_ok}")
    # closure under random words
    closure_ok = True
    trials = 10_000
    for _ in range(trials):
        n = rng.randint(3, 7)
        w = ReflectionWord(n, rng.randint(1, n), tuple(rng.randint(1, n) for _ in range(rng.randint(0, 50))))
        closure_ok &= not isinstance(classify(apply_word(w)), NotARoot)
    notes.append(f"closure over {trials} words {closure_ok}")
    # layout independence
    layouts = _random_layouts(rng, 20)
    lay_bad = 0
    for n, plane, ann in layouts:
        for v, cls in enumerate_positive_real(n, 1):
            expect_self = 0 if cls.tag.startswith("schur") else cls.m
            g = build_gamma(v)
            if geo.plane_self_count(build_F(v), plane) != expect_self \
                    or annulus_geometric_self(g, ann) != expect_self \
                    or dimension_vector(g, ann) != v:
                lay_bad += 1
            for lam in (0, 1, 2):
                w = shifted(v, lam)
                f = int_annulus(g, build_gamma(w))
                if f is Unsupported:
                    continue
                if geo.plane_pair_count(build_F(v), build_F(w), plane) != f \
                        or annulus_geometric_pair(g, build_gamma(w), ann) != f:
                    lay_bad += 1
    notes.append(f"{len(layouts)} random layouts, {lay_bad} disagreements")
    # Ext symmetry and doubling
    roots = [v for v, _ in enumerate_positive_real(4, 1)]
    sym_ok = all(ext_dim_cluster(a, b) == ext_dim_cluster(b, a) for a, b in itertools.combinations(roots, 2))
    dbl_ok = all(ext_dim_cluster(a, a) == 2 * ext_dim_kq(a, a) for a in roots)
    notes.append(f"ext symmetry {sym_ok}, doubling {dbl_ok}")
    # JSON round trip
    rt_ok = True
    for v, _ in enumerate_positive_real(5, 2):
        c = build_F(v)
        rt_ok &= decode_root(json.loads(json.dumps(encode_root(v)))) == v
        rt_ok &= decode_word(json.loads(json.dumps(encode_word(S(c)))), c.n) == S(c)
        rt_ok &= decode_curve(json.loads(json.dumps(encode_curve(c)))) == c
    notes.append(f"json round trip {rt_ok}")
    ok = inv_ok and closure_ok and lay_bad == 0 and sym_ok and dbl_ok and rt_ok
    return Outcome(ok, "; ".join(notes))


@lru_cache(maxsize=None)
def negative_control() -> list[tuple]:
    """Uncovered pairs: plane upper bound, annulus count and Ext, side by side."""
    rows = []
    for n in (3, 4):
        roots = [v for v, _ in enumerate_positive_real(n, 1)]
        for v, w in itertools.combinations(roots, 2):
            if int_annulus(build_gamma(v), build_gamma(w)) is not Unsupported:
                continue
            ub, _ = geo.plane_pair_upper_bound(build_F(v), build_F(w), restarts=4)
            rows.append((tuple(v), tuple(w), ub, annulus_geometric_pair(build_gamma(v), build_gamma(w)),
                         ext_dim_cluster(v, w)))
    return rows


@lru_cache(maxsize=None)
def criterion_7() -> Outcome:
    rows = negative_control()
    # plane minimum <= upper bound < Ext certifies a strict inequality
    unequal = [r for r in rows if r[2] < r[4]]
    ok = len(rows) >= 5
    ex = unequal[0] if unequal else None
    detail = f"{len(rows)} uncovered pairs reported without an equality claim; {len(unequal)} show plane Int < Ext"
    if ex:
        detail += f", e.g. {list(ex[0])} vs {list(ex[1])}: plane <= {ex[2]}, Ext_C = {ex[4]}"
    else:
        detail += " (vacuous pass: every sampled pair agreed)"
    return Outcome(ok, detail)


CRITERIA = {
    1: ("root map R(F(a)) = a and dimension vector of gamma_a = a", criterion_1),
    2: ("self-intersection chain equals plateau m", criterion_2),
    3: ("type 1/2 pairs: 2m in every model", criterion_3),
    4: ("Schur pairs: max(lambda-1, 0) in every model, mirror identical", criterion_4),
    5: ("spot checks from the worked examples", criterion_5),
    6: ("property suites", criterion_6),
    7: ("negative control outside the hypotheses", criterion_7),
}


def report_lines() -> list[str]:
    lines = []
    for k, (title, fn) in CRITERIA.items():
        out = fn()
        lines.append(f"criterion {k} [{'PASS' if out.passed else 'FAIL'}] {title}: {out.detail}")
    return lines


@pytest.mark.parametrize("k", [1, 3, 4, 5, 6, 7])
def test_criterion(k):
    out = CRITERIA[k][1]()
    assert out.passed, out.detail


def test_criterion_2_oracles_agree():
    """Plane, annulus and Ext self counts agree on every root; m for types 1 and 2, 0 for Schur."""
    for v, tag, m, plane, formula, drawn, ext in self_chain():
        expected = 0 if tag.startswith("schur") else m
        assert plane == formula == drawn == ext == expected, v


@pytest.mark.xfail(strict=True, reason="Schur roots are rigid: every oracle gives 0 where the criterion asks for m >= 1")
def test_criterion_2_literal():
    out = criterion_2()
    assert out.passed, out.detail


def test_report(capsys):
    lines = report_lines()
    with capsys.disabled():
        print()
        for line in lines:
            print(line)
    assert len(lines) == len(CRITERIA)


if __name__ == "__main__":
    for line in report_lines():
        print(line)
