#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Micro-benchmarks call both backend modules directly; the end-to-end arc
tracing comparison re-imports the package in a subprocess with
KARP_BACKEND forced, since the backend is chosen at import time.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import subprocess
import sys
import time

import numpy as np

from karpelevic import enumerate_arcs, evaluate, realizing_matrix, reduced_ito_polynomial
from karpelevic._kernels import _fallback

try:
    from karpelevic._kernels import _core
except ImportError:
    _core = None


def kernel_inputs():
    mats, polys = [], []
    for n in (9, 12):
        for desc in enumerate_arcs(n):
            mat = realizing_matrix(desc)
            for alpha in (0.1, 0.5, 0.9):
                mats.append(evaluate(mat, alpha))
                polys.append(np.trim_zeros(reduced_ito_polynomial(desc, alpha).as_array(), "f"))
    return mats, polys


def best_of(fn, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for x in inputs:
            fn(x)
        best = min(best, time.perf_counter() - t0)
    return best / len(inputs)


TRACE_SNIPPET = """
import time
from karpelevic import enumerate_arcs, trace_arc
from karpelevic._kernels import BACKEND
descs = enumerate_arcs(9)
t0 = time.perf_counter()
for d in descs:
    trace_arc(d, {steps})
print(f"{{BACKEND}} {{time.perf_counter() - t0:.3f}}")
"""


def end_to_end(backend, steps):
    out = subprocess.run(
        [sys.executable, "-c", TRACE_SNIPPET.format(steps=steps)],
        env={"KARP_BACKEND": backend, "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    name, seconds = out.stdout.split()
    return name, float(seconds)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="fewer repeats")
    args = parser.parse_args()
    repeat = 3 if args.quick else 7
    steps = 128 if args.quick else 256

    mats, polys = kernel_inputs()
    rows = []

    py_cp = best_of(_fallback.charpoly, mats, repeat)
    py_rt = best_of(_fallback.roots, polys, repeat)
    if _core is not None:
        c_cp = best_of(_core.charpoly, mats, repeat)
        c_rt = best_of(_core.roots, polys, repeat)
        rows.append(("charpoly (order <= 12)", c_cp, py_cp))
        rows.append(("roots (degree <= 17)", c_rt, py_rt))
    else:
        rows.append(("charpoly (order <= 12)", None, py_cp))
        rows.append(("roots (degree <= 17)", None, py_rt))

    print(f"{'kernel':<28} {'compiled':>12} {'python':>12} {'speedup':>9}")
    for name, c, py in rows:
        if c is None:
            print(f"{name:<28} {'n/a':>12} {py * 1e6:>10.1f}us {'':>9}")
        else:
            print(f"{name:<28} {c * 1e6:>10.1f}us {py * 1e6:>10.1f}us {py / c:>8.1f}x")

    print()
    name_py, t_py = end_to_end("py", steps)
    line = f"trace 28 arcs of order 9 ({steps} steps): python {t_py:.3f}s"
    if _core is not None:
        name_c, t_c = end_to_end("c", steps)
        line += f", compiled {t_c:.3f}s ({t_py / t_c:.1f}x)"
    print(line)
    if _core is None:
        print("compiled kernels not built; install with Cython to compare")


if __name__ == "__main__":
    main()
