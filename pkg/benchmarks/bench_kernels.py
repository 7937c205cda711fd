"""Compare the compiled shift-difference kernels against the pure-numpy
fallback on the hot paths: 1D Lip tables, 2D row tables, and the 2D
modulus table.

Run:  python benchmarks/bench_kernels.py [--sizes 256,512,1024] [--repeats 5]
"""

import argparse
import importlib
import time

import numpy as np


def load_backends():
    backends = {}
    from gridnorms import _kernels_py

    backends["python"] = _kernels_py
    try:
        backends["compiled"] = importlib.import_module("gridnorms._kernels")
    except ImportError:
        pass
    return backends


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="256,512,1024")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = load_backends()
    if "compiled" not in backends:
        print("compiled kernels unavailable; timing the fallback only")

    rng = np.random.default_rng(7)
    rows = [("case", "backend", "n", "best (ms)")]
    for n in sizes:
        v = rng.random(n)
        a = rng.random((max(16, n // 16), n))
        sq = rng.random((n // 8 + 2, n // 8 + 2))
        kmax = sq.shape[0]
        for name, mod in backends.items():
            rows.append(
                (
                    "lip_table_1d",
                    name,
                    str(n),
                    f"{1e3 * timeit(lambda: mod.shift_diff_table_1d(v), args.repeats):.3f}",
                )
            )
            rows.append(
                (
                    "rows_table",
                    name,
                    f"{a.shape[0]}x{n}",
                    f"{1e3 * timeit(lambda: mod.rows_shift_diff_table(a), args.repeats):.3f}",
                )
            )
            rows.append(
                (
                    "modulus_table_2d",
                    name,
                    f"{sq.shape[0]}^2",
                    f"{1e3 * timeit(lambda: mod.shift_diff_table_2d(sq, kmax), args.repeats):.3f}",
                )
            )

    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))

    if "compiled" in backends:
        v = rng.random(512)
        t_py = backends["python"].shift_diff_table_1d(v)
        t_cy = backends["compiled"].shift_diff_table_1d(v)
        assert np.allclose(t_py, t_cy, rtol=0, atol=0), "backend mismatch"
        print("\nbackends agree bit for bit on a 512-point table")


if __name__ == "__main__":
    main()
