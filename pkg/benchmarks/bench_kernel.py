#!/usr/bin/env python3
"""Benchmark: compiled reduction kernel vs pure-Python fallback.

Times reduced Groebner bases on standard small systems plus one full
pipeline run, with fresh ideal handles per measurement so caches do
not hide the work.  Run after ``pip install -e . --no-build-isolation``:

    python benchmarks/bench_kernel.py [--repeat 3]
"""

import argparse
import time

import binpart
from binpart.groebner import IdealHandle, reduced_gb
from binpart.pipeline import binomial_part_laurent
from binpart.rings import Ring


CASES = {
    "cyclic-4": (("a", "b", "c", "d"), [
        "a+b+c+d",
        "a*b+b*c+c*d+d*a",
        "a*b*c+b*c*d+c*d*a+d*a*b",
        "a*b*c*d-1",
    ]),
    "katsura-3": (("a", "b", "c", "d"), [
        "a+2*b+2*c+2*d-1",
        "a^2+2*b^2+2*c^2+2*d^2-a",
        "2*a*b+2*b*c+2*c*d-b",
        "b^2+2*a*c+2*b*d-c",
    ]),
    "dense-cubics": (("x", "y", "z"), [
        "x^3+2*x*y*z-3*y^2+z-1",
        "y^3-x^2*z+4*x*y-2*z^2+5",
        "z^3+x^2*y-y*z+3*x-7",
    ]),
}

PIPELINE_CASE = (("x", "y", "z"), ["(x-z)^2", "5*x - y - 4*z"])


def time_gb(names, gens, repeat):
    best = float("inf")
    for _ in range(repeat):
        ring = Ring(names)
        ideal = IdealHandle.from_strings(ring, gens)
        t0 = time.perf_counter()
        reduced_gb(ideal)
        best = min(best, time.perf_counter() - t0)
    return best


def time_pipeline(repeat):
    names, gens = PIPELINE_CASE
    best = float("inf")
    for _ in range(repeat):
        ring = Ring(names)
        ideal = IdealHandle.from_strings(ring, gens)
        t0 = time.perf_counter()
        binomial_part_laurent(ideal)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = binpart.available_kernels()
    if "compiled" not in kernels:
        print("compiled kernel not built; run pip install -e . first")
    results = {}
    for kernel in kernels:
        binpart.use_kernel(kernel)
        rows = {}
        for name, (names, gens) in CASES.items():
            rows[name] = time_gb(names, gens, args.repeat)
        rows["pipeline"] = time_pipeline(args.repeat)
        results[kernel] = rows

    cases = list(next(iter(results.values())))
    width = max(len(c) for c in cases)
    header = f"{'case':<{width}}" + "".join(f"  {k:>12}" for k in results)
    if len(results) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for case in cases:
        line = f"{case:<{width}}"
        for k in results:
            line += f"  {results[k][case]*1000:>10.1f}ms"
        if len(results) == 2:
            py = results["python"][case]
            cy = results["compiled"][case]
            line += f"  {py / cy:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
