#!/usr/bin/env python3
"""Compare the compiled BFS kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--runs 200]
"""

import argparse
import time

from netslice import kernels
from netslice.generators import GenSpec, Model, generate
from netslice.walk import run_parallel, run_sequential


def time_backend(backend, runs):
    kernels.set_backend(backend)
    graphs = [generate(GenSpec(model=m, seed=3)) for m in (Model.ER, Model.BA, Model.GEO)]

    # warm-up pass so cold-start effects don't skew whichever backend runs first
    for g in graphs:
        for s in range(10):
            run_parallel(g, s)

    t0 = time.perf_counter()
    for g in graphs:
        for s in range(runs):
            run_parallel(g, s)
    t_par = (time.perf_counter() - t0) / (runs * len(graphs))

    t0 = time.perf_counter()
    for g in graphs:
        for s in range(runs):
            run_sequential(g, s)
    t_seq = (time.perf_counter() - t0) / (runs * len(graphs))
    return t_par, t_seq


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--runs", type=int, default=200, help="runs per graph")
    args = parser.parse_args()

    if not kernels.HAVE_EXTENSION:
        print("compiled extension not built; nothing to compare")
        return

    results = {}
    for backend in ("python", "compiled"):
        results[backend] = time_backend(backend, args.runs)
        print("%-9s parallel %7.3f ms/run   sequential %7.3f ms/walk" % (
            backend, results[backend][0] * 1e3, results[backend][1] * 1e3))
    sp_par = results["python"][0] / results["compiled"][0]
    sp_seq = results["python"][1] / results["compiled"][1]
    print("speedup   parallel %6.2fx          sequential %6.2fx" % (sp_par, sp_seq))


if __name__ == "__main__":
    main()
