"""Time the compiled and pure-Python crossing kernels.

Two workloads: random integer polylines fed straight to the kernel, and
the exact annulus and plane counts of the verification sweep.

    python benchmarks/bench_kernel.py --segments 2000 --repeat 3
"""
from __future__ import annotations

import argparse
import random
import time

from rootcurves import _pykernel
from rootcurves import geom_oracle as geo
from rootcurves.annulus import annulus_geometric_pair, build_gamma
from rootcurves.root_system import Root, enumerate_positive_real
from rootcurves.word_builder import build_F

try:
    from rootcurves import _ckernel
except ImportError:
    _ckernel = None


def random_polyline(rng: random.Random, k: int, span: int) -> list[int]:
    flat = []
    x = 0
    for _ in range(k + 1):
        x += rng.randint(1, 5)
        flat += [x, rng.randint(-span, span)]
    return flat


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def sweep(n_max: int, m_max: int) -> int:
    total = 0
    for n in range(3, n_max + 1):
        for v, _ in enumerate_positive_real(n, m_max):
            w = Root(x + 1 for x in v)
            total += geo.plane_pair_count(build_F(v), build_F(w))
            total += annulus_geometric_pair(build_gamma(v), build_gamma(w))
    return total


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--segments", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sweep-n", type=int, default=5)
    ap.add_argument("--sweep-m", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    a = random_polyline(rng, args.segments, 1000)
    b = random_polyline(rng, args.segments, 1000)
    kernels = [("python", _pykernel.segment_crossings)]
    if _ckernel is not None:
        kernels.append(("compiled", _ckernel.segment_crossings))
    counts = set()
    print(f"raw kernel, two polylines of {args.segments} segments")
    for name, fn in kernels:
        counts.add(fn(a, b)[0])
        print(f"  {name:9s} {best_of(lambda: fn(a, b), args.repeat):8.4f} s")
    if len(counts) != 1:
        raise SystemExit(f"kernels disagree: {sorted(counts)}")

    print(f"pair sweep n<={args.sweep_n}, m<={args.sweep_m}, lambda=1 (backend {geo.BACKEND})")
    saved = geo._compiled_crossings
    results = {}
    for name in [k for k, _ in kernels]:
        geo._compiled_crossings = saved if name == "compiled" else None
        t = time.perf_counter()
        results[name] = sweep(args.sweep_n, args.sweep_m)
        print(f"  {name:9s} {time.perf_counter() - t:8.4f} s  total crossings {results[name]}")
    geo._compiled_crossings = saved
    if len(set(results.values())) != 1:
        raise SystemExit("sweep totals differ between kernels")


if __name__ == "__main__":
    main()
