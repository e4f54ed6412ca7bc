#!/usr/bin/env python3
"""Benchmark the witness-search backends against each other.

The enumeration DFS is the only hot loop in the package; everything else is
small exact algebra.  This script times the numba kernel against the pure
Python fallback on the two worked examples and checks they return identical
witness lists.

Usage: python3 benchmarks/bench_enumeration.py [--max-len N]
"""

import argparse
import time

from heq.enumeration import NUMBA_AVAILABLE, enumerate_kernel
from heq.equations import HContext
from heq.psl2 import ProjMat2


def bench(name, ctx, max_len):
    print(f"=== {name}, max_len={max_len} ===")
    t0 = time.perf_counter()
    slow = enumerate_kernel(ctx, max_len, backend="python")
    t_py = time.perf_counter() - t0
    print(f"python: {t_py:8.3f}s  ({len(slow.witnesses)} witnesses)")
    if not NUMBA_AVAILABLE:
        print("numba:  not installed, skipping")
        return
    # warm up once so compilation is not billed to the measurement
    enumerate_kernel(ctx, min(4, max_len), backend="numba")
    t0 = time.perf_counter()
    fast = enumerate_kernel(ctx, max_len, backend="numba")
    t_nb = time.perf_counter() - t0
    print(f"numba:  {t_nb:8.3f}s  ({len(fast.witnesses)} witnesses)")
    print(f"speedup: {t_py / t_nb:.1f}x")
    assert fast.witnesses == slow.witnesses, "backends disagree"
    print("results match")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-len", type=int, default=9)
    args = parser.parse_args()

    h1 = ProjMat2(2, -1, -1, 1)
    h2 = ProjMat2(2, -5, 1, -2)
    print(f"numba available: {NUMBA_AVAILABLE}")
    bench("transcendental example g=[[5,3],[3,2]]",
          HContext.from_matrices([h1, h2], ProjMat2(5, 3, 3, 2)), args.max_len)
    bench("algebraic example g=[[1,0],[-2,1]]",
          HContext.from_matrices([h1, h2], ProjMat2(1, 0, -2, 1)), args.max_len)


if __name__ == "__main__":
    main()
