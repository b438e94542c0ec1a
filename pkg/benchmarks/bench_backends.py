"""Benchmark the pure-Python kernels against the compiled ones.

Runs each workload on both backends, checks the outputs agree, and prints
a timing table. Usage: python3 benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

import mincw._kernels_py as pure_backend

try:
    import mincw._speedups as fast_backend
except ImportError:
    fast_backend = None

from mincw.optimize import _sweep_plan


def _accept_batch(mod, cases):
    return [mod.subset_accept(list(vals)) for vals in cases]


def _workloads(quick: bool):
    rng = random.Random(2024)
    cases = [
        [rng.randrange(1, 32) for _ in range(rng.randint(2, 6))]
        for _ in range(2_000 if quick else 20_000)
    ]
    rows = []
    while len(rows) < 14:
        r = rng.randrange(1, 1 << 16)
        probe = rows + [r]
        basis = []
        ok = True
        for x in probe:
            for b in basis:
                x = min(x, x ^ b)
            if not x:
                ok = False
                break
            basis.append(x)
        if ok:
            rows = probe
    nvals3, pair3, plan3 = _sweep_plan(3, False)
    k3 = 12 if quick else 18
    info = [rng.randrange(0, 8) for _ in range(40)]
    census_nk = (6, 4) if quick else (7, 5)
    return [
        ("subset_accept x%d" % len(cases), _accept_batch, (cases,)),
        ("catalog_scan(5)", lambda m: m.catalog_scan(5), ()),
        (
            "composition_sweep t=3 k=%d" % k3,
            lambda m, *a: m.composition_sweep(*a),
            (nvals3, k3, pair3, plan3, None),
        ),
        (
            "census_scan(%d, %d)" % census_nk,
            lambda m, *a: m.census_scan(*a),
            census_nk,
        ),
        (
            "systematic_subsets k=40 card<=4",
            lambda m, *a: m.systematic_subsets(*a),
            (info, 4, None),
        ),
        ("bruteforce_minimal k=14", lambda m, *a: m.bruteforce_minimal(*a), (rows,)),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    if fast_backend is None:
        print("compiled backend not available; nothing to compare")
        return 1
    print(f"{'workload':38s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}")
    for name, fn, fargs in _workloads(args.quick):
        t0 = time.perf_counter()
        got_pure = fn(pure_backend, *fargs)
        t1 = time.perf_counter()
        got_fast = fn(fast_backend, *fargs)
        t2 = time.perf_counter()
        if got_pure != got_fast:
            print(f"{name:38s} BACKEND MISMATCH")
            return 1
        dp, df = t1 - t0, t2 - t1
        ratio = dp / df if df > 0 else float("inf")
        print(f"{name:38s} {dp:10.3f} {df:13.3f} {ratio:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
