"""Time the compiled and pure-Python exact solvers on deletion-ladder systems.

    python3 benchmarks/bench_kernels.py [--q 21 25] [--steps 5] [--repeat 3]

Each system is the full per-edge positivity system of a graph from the start
of the ladder (the largest matrices). Both backends must return identical
solutions; the script aborts otherwise.
"""

from __future__ import annotations

import argparse
import statistics
import time

from nilgraph.kernels import available_backends
from nilgraph.linalg import _integer_rows
from nilgraph.positivity import positivity_matrix
from nilgraph.theorem import theorem_graph_at


def _time(fn, rows, rhs, repeat):
    samples = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(rows, rhs)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[21, 25])
    ap.add_argument("--steps", type=int, default=5, help="ladder steps per q, from l=0")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available")
    names = sorted(backends)
    print(f"{'q':>3} {'l':>3} {'p':>4} " + " ".join(f"{n + ' [s]':>12}" for n in names) + "  speedup")
    for q in args.q:
        for l in range(args.steps):
            g = theorem_graph_at(q, l)
            rows, rhs = _integer_rows(positivity_matrix(g), [1] * g.p)
            times, results = {}, {}
            for n in names:
                times[n], results[n] = _time(backends[n], rows, rhs, args.repeat)
            if len({tuple(r[0]) + (r[1],) for r in results.values()}) != 1:
                raise SystemExit(f"backends disagree at q={q}, l={l}")
            speed = times["python"] / times["cython"] if "cython" in times else 1.0
            print(f"{q:>3} {l:>3} {g.p:>4} " + " ".join(f"{times[n]:>12.4f}" for n in names)
                  + f"  {speed:6.1f}x")


if __name__ == "__main__":
    main()
