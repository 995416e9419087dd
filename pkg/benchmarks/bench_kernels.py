#!/usr/bin/env python3
"""Benchmark the compiled kernel lane against the numpy fallback.

Times the hot path of the cocycle scan (nerve enumeration, face-table
construction and the alternating face-gather sum) on the degree-4 nerve of
the one-object S4 groupoid: 331776 tuples at modulus 24, the performance-
guard workload.

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from tetk import kernels
from tetk.cochain import Cochain, is_cocycle
from tetk.groupoid import action_groupoid
from tetk.groups import symmetric_group, trivial_action
from tetk.nerve import nerve


def bench_lane(lane, repeat):
    kernels.ACTIVE = lane
    rows = {}

    def timed(label, fn, n=repeat):
        best = min(run_once(fn) for _ in range(n))
        rows[label] = best
        return best

    def run_once(fn):
        start = time.perf_counter()
        fn()
        return time.perf_counter() - start

    s4 = symmetric_group(4)

    def cold_scan():
        gpd = action_groupoid(trivial_action(s4))   # fresh caches
        assert is_cocycle(Cochain.zero(gpd, 3, 24))

    timed("cold cocycle scan (enumerate + faces + sum)", cold_scan)

    gpd = action_groupoid(trivial_action(s4))
    nc = nerve(gpd)
    nc.faces(4)  # warm the caches
    rng = np.random.default_rng(0)
    table = rng.integers(0, 24, size=nc.count(3)).astype(np.int64)

    timed("warm signed face sum only",
          lambda: lane.signed_sum_mod(table, nc.faces(4), 24))

    def enumerate_only():
        fresh = action_groupoid(trivial_action(s4))
        nerve(fresh).tuples(4)

    timed("tuple enumeration to degree 4", enumerate_only)
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    lanes = kernels.available_lanes()
    print(f"available lanes: {', '.join(lanes)}")
    print("workload: B(S4), degree-4 nerve, 331776 tuples, modulus 24\n")
    results = {}
    original = kernels.ACTIVE
    try:
        for name, lane in lanes.items():
            results[name] = bench_lane(lane, args.repeat)
    finally:
        kernels.ACTIVE = original

    labels = list(next(iter(results.values())))
    width = max(len(label) for label in labels)
    header = f"{'step':<{width}}" + "".join(f"  {name:>12}" for name in results)
    if len(results) > 1:
        header += f"  {'speedup':>9}"
    print(header)
    for label in labels:
        line = f"{label:<{width}}"
        times = [results[name][label] for name in results]
        for t in times:
            line += f"  {t * 1000:>10.2f}ms"
        if len(times) > 1 and times[-1] > 0:
            line += f"  {times[0] / times[-1]:>8.2f}x"
        print(line)


if __name__ == "__main__":
    main()
