"""Compare the compiled and pure-Python kernels on the same inputs.

Usage::

    python benchmarks/bench_kernels.py [--repeat 3] [--n 100000] [--m 500000]

Each backend runs Hopcroft-Karp on a random bipartite graph, the full
k-round ``solve``, and the branch-and-bound oracle on dense random
graphs of 30-36 vertices. Outputs are checked to be identical across backends.
"""

from __future__ import annotations

import argparse
import time

from kdepset import _backend
from kdepset.approx import solve
from kdepset.generators import random_bipartite_m, random_graph
from kdepset.matching import max_matching
from kdepset.oracle import exact_max_k_dependent


def best_of(repeat: int, fn):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--m", type=int, default=500_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    g = random_bipartite_m(args.n, args.m, args.seed)
    dense = [random_graph(n, 0.3, args.seed + n) for n in (30, 33, 36)]
    cases = {
        f"hopcroft-karp n={args.n} m={args.m}": lambda: len(max_matching(g)),
        f"solve k=3 n={args.n} m={args.m}": lambda: len(solve(g, 3)[0]),
        "branch-and-bound k=2 n=30..36 p=0.3": lambda: [
            exact_max_k_dependent(h, 2, 64).size for h in dense],
    }

    backends = sorted(_backend.available_backends())
    results: dict[str, dict[str, tuple[float, object]]] = {}
    for name in backends:
        _backend.use(name)
        results[name] = {case: best_of(args.repeat, fn) for case, fn in cases.items()}

    width = max(map(len, cases))
    print(f"{'case':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for case in cases:
        row = [results[b][case][0] for b in backends]
        line = f"{case:<{width}}  " + "  ".join(f"{t:>9.3f}s" for t in row)
        if len(backends) == 2:
            line += f"  {row[1] / row[0]:>9.1f}x"
        print(line)
        outs = {repr(results[b][case][1]) for b in backends}
        if len(outs) != 1:
            raise SystemExit(f"backends disagree on {case}: {outs}")
    if len(backends) < 2:
        print("compiled backend not built; only the Python kernels were timed")


if __name__ == "__main__":
    main()
