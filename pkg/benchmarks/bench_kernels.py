"""Compare the compiled kernels against the pure-Python kernels.

Runs the hot primitives on representative workloads (exact big-int linear
algebra, dense integer polynomial updates) and an end-to-end invariant
factor computation. Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from endospec._kernels import pure

try:
    from endospec._kernels import _speedups
except ImportError:
    _speedups = None


def _random_matrix(rng, n, bound):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]


def _workloads(rng):
    m12 = _random_matrix(rng, 12, 50)
    m16 = _random_matrix(rng, 16, 10)
    m24 = _random_matrix(rng, 24, 10**6)
    big = _random_matrix(rng, 10, 10**12)
    import itertools

    subsets3 = list(itertools.combinations(range(10), 3))
    pa = [rng.randint(-10**9, 10**9) for _ in range(60)]
    pb = [rng.randint(-10**9, 10**9) for _ in range(60)]
    prow = [[rng.randint(-10**6, 10**6) for _ in range(8)] for _ in range(16)]
    qrow = [[rng.randint(-10**6, 10**6) for _ in range(8)] for _ in range(16)]
    return [
        ("charpoly 12x12", lambda k: k.charpoly_int(m12)),
        ("charpoly 16x16", lambda k: k.charpoly_int(m16)),
        ("det 24x24 big entries", lambda k: k.det_int(m24)),
        ("matmul 24x24 x8", lambda k: [k.mat_mul_int(m24, m24) for _ in range(8)]),
        (
            "minors C(10,3)^2 of 10x10",
            lambda k: k.minor_dets_int(big, subsets3, subsets3),
        ),
        ("polymul deg 59 x200", lambda k: [k.poly_mul_int(pa, pb) for _ in range(200)]),
        (
            "row_combine 16-wide x200",
            lambda k: [k.row_combine_int(prow, qrow, 3, pa[:4]) for _ in range(200)],
        ),
    ]


def _time(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_invariant_factors(repeat):
    """End-to-end check through the public interface, both backends."""
    import subprocess
    import sys

    code = (
        "import time\n"
        "from endospec.matrixops import ExactMatrix, invariant_factors\n"
        "from endospec._kernels import BACKEND\n"
        "rows = [[(i * 7 + j * 3 + 1) % 23 - 11 for j in range(14)] for i in range(14)]\n"
        "t0 = time.perf_counter()\n"
        f"for _ in range({repeat}):\n"
        "    invariant_factors(ExactMatrix(rows))\n"
        "print(BACKEND, time.perf_counter() - t0)\n"
    )
    out = {}
    for env_extra in ({}, {"ENDOSPEC_PURE": "1"}):
        import os

        env = dict(os.environ, **env_extra)
        res = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        backend, t = res.stdout.split()
        out[backend] = float(t)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _speedups is None:
        print("compiled kernels unavailable; nothing to compare")
        return
    rng = random.Random(2024)
    rows = _workloads(rng)
    print(f"{'workload':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in rows:
        tp = _time(lambda: fn(pure), args.repeat)
        tc = _time(lambda: fn(_speedups), args.repeat)
        print(f"{name:<28} {tp:>9.4f}s {tc:>9.4f}s {tp / tc:>7.2f}x")
    ends = bench_invariant_factors(max(args.repeat, 3))
    if set(ends) == {"pure", "compiled"}:
        print(
            f"{'invariant_factors 14x14':<28} {ends['pure']:>9.4f}s "
            f"{ends['compiled']:>9.4f}s {ends['pure'] / ends['compiled']:>7.2f}x"
        )


if __name__ == "__main__":
    main()
