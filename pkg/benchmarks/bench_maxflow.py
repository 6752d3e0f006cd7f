"""Compare the compiled max-flow kernel against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_maxflow.py [--sizes 500 2000 8000] [--seed 0]
"""

import argparse
import random
import time

from surfcut import _dinic_py
from surfcut.cuttree import KERNEL

try:
    from surfcut import _dinic
    KERNELS = [("compiled", _dinic.max_flow), ("pure", _dinic_py.max_flow)]
except ImportError:
    KERNELS = [("pure", _dinic_py.max_flow)]


def make_graph(n, seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v, rng.randint(1, 1000)) for v in range(1, n)]
    edges += [(rng.randrange(n), rng.randrange(n), rng.randint(1, 1000))
              for _ in range(3 * n)]
    return [(u, v, w) for u, v, w in edges if u != v]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[500, 2000, 8000])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pairs", type=int, default=20)
    args = ap.parse_args()

    print(f"kernel selected at import: {KERNEL}")
    print(f"{'n':>8} {'m':>8}" +
          "".join(f" {name + ' (s)':>14}" for name, _ in KERNELS) +
          f" {'speedup':>9}")
    for n in args.sizes:
        edges = make_graph(n, args.seed)
        row = [f"{n:>8} {len(edges):>8}"]
        times = []
        for name, fn in KERNELS:
            t0 = time.perf_counter()
            for i in range(args.pairs):
                fn(n, edges, i % n, (n // 2 + i) % n)
            times.append(time.perf_counter() - t0)
            row.append(f" {times[-1]:>14.3f}")
        speedup = times[-1] / times[0] if len(times) == 2 else 1.0
        row.append(f" {speedup:>8.1f}x")
        print("".join(row))


if __name__ == "__main__":
    main()
