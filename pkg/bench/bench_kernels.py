"""Benchmark the jitted kernels against the pure-numpy fallback.

Runs every hot kernel on the line graph of a long path plus a random
graph, then times a short end-to-end enumeration under each backend.

    python bench/bench_kernels.py --path-n 500 --repeats 200
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

import numpy as np

from flipdom.edge_dom import LineGraphMap
from flipdom.graph import Graph, path_graph
from flipdom.kernels import _numpy

try:
    from flipdom.kernels import _numba
except ImportError:
    _numba = None


def _random_graph(rng, n, p):
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
             if rng.random() < p]
    return Graph(n, edges)


def _time(fn, repeats):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return statistics.median(best) * 1e6   # microseconds


def bench_kernels(g, repeats):
    full = np.ones(g.n + 1, dtype=np.bool_)
    full[0] = False
    _, mask = _numpy.greedy_removal(g.indptr, g.indices, full)
    seed = np.zeros(g.n + 1, dtype=np.bool_)
    buf = np.empty(g.n + 1, dtype=np.int32)
    j = next((v for v in g.vertices() if not mask[v]), 1)

    cases = [
        ("cover_counts", lambda m: m.cover_counts(g.indptr, g.indices, mask)),
        ("is_dominating", lambda m: m.is_dominating(g.indptr, g.indices, mask)),
        ("greedy_removal", lambda m: m.greedy_removal(g.indptr, g.indices, mask)),
        ("greedy_independent",
         lambda m: m.greedy_independent(g.indptr, g.indices, mask, seed)),
        ("is_minimal_dominating",
         lambda m: m.is_minimal_dominating(g.indptr, g.indices, mask)),
        ("mis_successor",
         lambda m: m.mis_successor(g.indptr, g.indices, mask, j, buf)),
        ("girth", lambda m: m.girth(g.indptr, g.indices)),
    ]
    print(f"{'kernel':24s} {'numpy us':>12s} {'numba us':>12s} {'speedup':>9s}")
    for name, call in cases:
        reps = repeats if name != "girth" else max(1, repeats // 50)
        t_np = _time(lambda: call(_numpy), reps)
        if _numba is None:
            print(f"{name:24s} {t_np:12.1f} {'n/a':>12s} {'n/a':>9s}")
            continue
        call(_numba)   # compile outside the timer
        t_nb = _time(lambda: call(_numba), reps)
        print(f"{name:24s} {t_np:12.1f} {t_nb:12.1f} {t_np / t_nb:8.1f}x")


def bench_end_to_end(path_n, limit):
    """Each backend in a fresh process, selected by the env flag."""
    code = (
        "import time, flipdom\n"
        "from flipdom.driver import LINE_GENERATOR, enumerate_all\n"
        "from flipdom.edge_dom import LineGraphMap\n"
        "from flipdom.graph import path_graph\n"
        "list(flipdom.enumerate_mds_line(path_graph(12)))\n"
        f"g = LineGraphMap(path_graph({path_n})).line\n"
        "stream = enumerate_all(g, LINE_GENERATOR)\n"
        "t0 = time.perf_counter()\n"
        f"for _ in range({limit}):\n"
        "    next(stream)\n"
        "print(time.perf_counter() - t0)\n"
    )
    print(f"\nend-to-end: first {limit} sets of L(P_{path_n})")
    for backend in ("numpy", "numba"):
        if backend == "numba" and _numba is None:
            continue
        env = dict(os.environ, FLIPDOM_KERNELS=backend)
        out = subprocess.run([sys.executable, "-c", code],
                             capture_output=True, text=True, env=env)
        if out.returncode != 0:
            print(f"  {backend}: failed\n{out.stderr}")
            continue
        print(f"  {backend:6s} {float(out.stdout.strip()):8.2f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--path-n", type=int, default=500)
    ap.add_argument("--random-n", type=int, default=300)
    ap.add_argument("--repeats", type=int, default=200)
    ap.add_argument("--limit", type=int, default=500,
                    help="outputs for the end-to-end comparison")
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    if _numba is None:
        print("numba unavailable; timing the fallback only")

    line = LineGraphMap(path_graph(args.path_n)).line
    print(f"\n== line graph of P_{args.path_n} (n={line.n}, m={line.m}) ==")
    bench_kernels(line, args.repeats)

    rnd = _random_graph(random.Random(7), args.random_n, 0.02)
    print(f"\n== sparse random graph (n={rnd.n}, m={rnd.m}) ==")
    bench_kernels(rnd, args.repeats)

    if not args.skip_end_to_end:
        bench_end_to_end(args.path_n, args.limit)


if __name__ == "__main__":
    main()
