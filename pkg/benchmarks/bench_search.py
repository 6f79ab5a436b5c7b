"""Compare the compiled and pure-Python search kernels.

Runs exhaustive counting (the heaviest code path: the full tree is always
visited) on a ladder of instances, checks that both kernels return the
same counts, and prints a timing table with the speedup.

Usage: python benchmarks/bench_search.py [--quick]
"""

from __future__ import annotations

import argparse
import sys
import time

from roughgrace import (
    SearchConfig,
    available_kernels,
    count_labelings,
    make_family,
    search_labeling,
)


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - start


def bench_instances(quick: bool):
    # counting visits the entire pruned tree, so cap drives the workload
    instances = [
        ("cycle", 6, 8),
        ("comb", 4, 9),
        ("ladder", 3, 9),
        ("path", 8, 9),
    ]
    if not quick:
        instances += [
            ("cycle", 8, 10),
            ("path_star", 2, 10),
        ]
    return instances


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    kernels = available_kernels()
    if "compiled" not in kernels:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'instance':<18} {'cap':>3} {'count':>10} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    total = {"pure": 0.0, "compiled": 0.0}
    for family, n, cap in bench_instances(args.quick):
        g = make_family(family, n).graph
        cfg = SearchConfig(cap=cap, mode="count")
        counts = {}
        times = {}
        for kernel in ("pure", "compiled"):
            counts[kernel], times[kernel] = timed(count_labelings, g, cfg, kernel=kernel)
            total[kernel] += times[kernel]
        if counts["pure"] != counts["compiled"]:
            print(f"KERNEL DISAGREEMENT on {family} n={n}: {counts}", file=sys.stderr)
            return 2
        speedup = times["pure"] / times["compiled"] if times["compiled"] > 0 else float("inf")
        print(
            f"{family + ' n=' + str(n):<18} {cap:>3} {counts['pure']:>10}"
            f" {times['pure']:>8.3f}s {times['compiled']:>8.3f}s {speedup:>7.1f}x"
        )

    # first-solution latency on a slightly larger instance
    g = make_family("ladder", 4).graph
    cfg = SearchConfig(cap=11)
    row = {}
    for kernel in ("pure", "compiled"):
        result, elapsed = timed(search_labeling, g, cfg, kernel=kernel)
        row[kernel] = (result.found is not None, elapsed)
    assert row["pure"][0] == row["compiled"][0]
    print(
        f"{'ladder n=4 first':<18} {11:>3} {'-':>10}"
        f" {row['pure'][1]:>8.3f}s {row['compiled'][1]:>8.3f}s"
        f" {(row['pure'][1] / row['compiled'][1]) if row['compiled'][1] else float('inf'):>7.1f}x"
    )
    speedup_total = total["pure"] / total["compiled"] if total["compiled"] else float("inf")
    print(f"\ntotal count-mode time: pure {total['pure']:.3f}s, "
          f"compiled {total['compiled']:.3f}s ({speedup_total:.1f}x)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
