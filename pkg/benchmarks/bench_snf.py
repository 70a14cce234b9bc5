"""Timing deck for the two integer diagonalization kernels.

Runs the compiled and the pure-Python kernel over the same matrices,
asserts the certificates agree entry for entry, and prints a small
table.  Usage:

    python3 benchmarks/bench_snf.py [--trials N] [--seed S]

The compiled kernel is only worth shipping while this stays clearly
ahead; if the gap ever closes, drop the extension and keep the one
implementation.
"""

import argparse
import random
import statistics
import sys
import time

from adic_smith import SNF_BACKEND
from adic_smith import _snf_py

try:
    from adic_smith import _snf_cy
except ImportError:
    _snf_cy = None


def deck(rng, trials, m, n, bound):
    return [
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]
        for _ in range(trials)
    ]


def run(kernel, matrices, m, n):
    times = []
    outs = []
    for rows in matrices:
        t0 = time.perf_counter()
        outs.append(kernel(m, n, rows))
        times.append(time.perf_counter() - t0)
    return outs, sum(times), statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=40)
    ap.add_argument("--seed", type=int, default=20260823)
    args = ap.parse_args(argv)

    if _snf_cy is None:
        print("compiled kernel not built; run: python3 setup.py build_ext --inplace")
        return 1
    print(f"active backend at import time: {SNF_BACKEND}")
    print(f"{'shape':>10} {'bound':>6} {'python':>10} {'compiled':>10} {'speedup':>8}")

    rng = random.Random(args.seed)
    for m, n, bound in ((6, 6, 9), (10, 10, 9), (12, 12, 99), (16, 12, 9), (12, 20, 999)):
        matrices = deck(rng, args.trials, m, n, bound)
        py_out, py_total, py_med = run(_snf_py.snf_int, matrices, m, n)
        cy_out, cy_total, cy_med = run(_snf_cy.snf_int, matrices, m, n)
        for a, b in zip(py_out, cy_out):
            assert a == b, "kernels disagree; do not trust these timings"
        print(
            f"{f'{m}x{n}':>10} {bound:>6} {py_total:>9.3f}s {cy_total:>9.3f}s "
            f"{py_total / cy_total:>7.1f}x"
        )
    print(f"median check (12x12): python {py_med * 1e3:.2f} ms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
