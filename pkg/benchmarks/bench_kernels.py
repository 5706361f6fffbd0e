#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Workloads mirror the real hot paths: a membership raster (512x512 queries
against a handful of generators), the coefficient/join pipeline behind
witness construction, and the dense pairwise-distance matrix behind
Hausdorff and oracle computations.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from maxplus import backend


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(rng):
    n = 2
    m = 5
    gens = rng.uniform(-2, 2, (m, n))
    u = rng.uniform(0.5, 2.0, n)
    side = 512
    axis = np.linspace(-4, 4, side)
    gx, gy = np.meshgrid(axis, axis, indexing="ij")
    raster = np.column_stack([gx.ravel(), gy.ravel()])
    coeffs = -rng.exponential(1.0, (raster.shape[0], m))
    coeffs -= coeffs.max(axis=1, keepdims=True)
    A = rng.uniform(-2, 2, (400, 4))
    B = rng.uniform(-2, 2, (3000, 4))
    u4 = rng.uniform(0.5, 2.0, 4)
    return [
        ("lower_coeffs 262k x 5 gens", lambda k: k.lower_coeffs(gens, u, raster)),
        ("join_comb    262k x 5 gens", lambda k: k.join_comb(gens, u, coeffs)),
        ("pairwise_dist 400 x 3000 hu", lambda k: k.pairwise_dist(u4, A, B, "hu")),
        ("pairwise_dist 400 x 3000 u", lambda k: k.pairwise_dist(u4, A, B, "u")),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    names = backend.available_backends()
    print(f"backends: {', '.join(names)}   (active: {backend.BACKEND_NAME})\n")
    rows = []
    for label, work in workloads(rng):
        times = {}
        for name in names:
            kern = backend.get_backend(name)
            times[name] = _time(lambda: work(kern), args.repeat)
        rows.append((label, times))

    width = max(len(label) for label, _ in rows) + 2
    header = f"{'workload':<{width}}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, times in rows:
        line = f"{label:<{width}}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            line += f"{times['python'] / times['compiled']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
