"""Benchmark the jit kernels against the pure-numpy fallbacks.

The pairwise-deviation kernel is quadratic in the number of plans; the
distance grid is linear but sits in every scoring call. Run::

    python benchmarks/bench_kernels.py --plans 500 2000 8000 --attributes 12

Jit compilation is triggered once before timing, so the numbers compare
steady-state throughput only. Set GREYRANK_NO_NUMBA=1 to confirm the numpy
numbers from inside the dispatcher too.
"""

from __future__ import annotations

import argparse
from time import perf_counter

import numpy as np

from greyrank._kernels import (
    distance_grid,
    distance_grid_numpy,
    pairwise_deviation_sums,
    pairwise_deviation_sums_numpy,
    using_numba,
    warmup,
)


def _time(fn, *args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = perf_counter()
        fn(*args)
        best = min(best, perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--plans", type=int, nargs="+", default=[200, 1000, 4000])
    parser.add_argument("--attributes", type=int, default=10)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    warmup()  # exclude jit compilation from every timing below
    print(f"numba active: {using_numba()}")
    print(f"{'n':>7} {'m':>4} {'kernel':<22} {'dispatch':>10} {'numpy':>10} {'speedup':>8}")

    for n in args.plans:
        x = np.sort(rng.random((n, args.attributes, 4)), axis=2)
        ref = x.max(axis=0)

        t_disp = _time(pairwise_deviation_sums, x, repeats=args.repeats)
        t_numpy = _time(pairwise_deviation_sums_numpy, x, repeats=args.repeats)
        print(
            f"{n:>7} {args.attributes:>4} {'pairwise_deviation':<22} "
            f"{t_disp * 1e3:>8.2f}ms {t_numpy * 1e3:>8.2f}ms {t_numpy / t_disp:>7.1f}x"
        )

        t_disp = _time(distance_grid, x, ref, repeats=args.repeats)
        t_numpy = _time(distance_grid_numpy, x, ref, repeats=args.repeats)
        print(
            f"{n:>7} {args.attributes:>4} {'distance_grid':<22} "
            f"{t_disp * 1e3:>8.2f}ms {t_numpy * 1e3:>8.2f}ms {t_numpy / t_disp:>7.1f}x"
        )


if __name__ == "__main__":
    main()
