"""Compare the compiled kernels with the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from csflab import _pykernels


def _random_adj(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def _edges(adj):
    return [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]


def workloads(seed):
    rng = random.Random(seed)
    canon = [_random_adj(rng, rng.randint(8, 12), rng.choice([0.2, 0.5, 0.8])) for _ in range(300)]
    census = [_random_adj(rng, 10, 0.3) for _ in range(20)]
    subsets = [_random_adj(rng, 8, 0.55) for _ in range(10)]
    return [
        ("canonical_certificate (300 graphs, n=8..12)", lambda k: [k.canonical_certificate(len(a), a) for a in canon]),
        ("stable_census (20 graphs, n=10)", lambda k: [k.stable_census(len(a), a) for a in census]),
        ("edge_subset_census (10 graphs, n=8)", lambda k: [k.edge_subset_census(len(a), _edges(a), 99) for a in subsets]),
    ]


def best_of(fn, kernel, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(kernel)
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    try:
        from csflab import _kernels as compiled
    except ImportError:
        compiled = None
        print("compiled extension not built; timing the Python fallback only")
    print(f"{'workload':48s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn in workloads(args.seed):
        py = best_of(fn, _pykernels, args.repeat)
        if compiled is None:
            print(f"{name:48s} {py:10.3f}")
            continue
        if fn(compiled) != fn(_pykernels):
            raise SystemExit(f"backends disagree on {name}")
        cy = best_of(fn, compiled, args.repeat)
        print(f"{name:48s} {py:10.3f} {cy:10.3f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
