#!/usr/bin/env python3
"""Benchmark: compiled histogram kernels against the pure-Python fallback.

Times the per-block enumeration kernels on representative workloads and a
couple of end-to-end counts.  Run from the repository root:

    python benchmarks/bench_kernels.py [--quick]

The compiled extension must be built (pip install -e . does this) or only
the pure rows will appear.
"""

from __future__ import annotations

import argparse
import time

from qflocal import _purekernel

try:
    from qflocal import _fastkernel
except ImportError:
    _fastkernel = None


def _time(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench(name, fast_fn, pure_fn, args, repeats):
    pure_t, pure_out = _time(pure_fn, *args, repeats=repeats)
    row = f"{name:34s} pure {pure_t * 1e3:10.2f} ms"
    if fast_fn is not None:
        fast_t, fast_out = _time(fast_fn, *args, repeats=repeats)
        assert list(fast_out) == list(pure_out), f"kernel mismatch in {name}"
        row += f"   fast {fast_t * 1e3:9.2f} ms   speedup {pure_t / fast_t:7.1f}x"
    print(row)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    shift = 4 if args.quick else 0
    workloads = [
        ("rank-1 histogram, 2^18 states", "hist_diag", (3, 1, 1 << (18 - shift), 1 << (18 - shift))),
        ("rank-1 histogram, 2^21 states", "hist_diag", (5, 1, 1 << (21 - shift), 1 << (21 - shift))),
        ("three squares, 2^18 states", "hist_diag", (1, 3, 1 << (6 - shift // 2), 1 << (6 - shift // 2))),
        ("split plane, 2^20 states", "hist_h0", (2, 1 << (10 - shift // 2), 1 << (10 - shift // 2))),
        ("anisotropic plane, 2^20 states", "hist_h1", (2, 1 << (10 - shift // 2), 1 << (10 - shift // 2))),
    ]

    if _fastkernel is None:
        print("compiled kernel not available; timing the pure fallback only")
    for name, fn_name, fn_args in workloads:
        bench(
            name,
            getattr(_fastkernel, fn_name, None) if _fastkernel else None,
            getattr(_purekernel, fn_name),
            fn_args,
            repeats=1 if "2^21" in name else 2,
        )

    # End-to-end: one full oracle sweep instance (Type I block, level 18).
    from qflocal import _kernel
    from qflocal.lattice import TypeI, single
    from qflocal.oracle import count_enumerate

    spec = single(TypeI(1, 3), 2)
    m = 18 - shift
    start = time.perf_counter()
    count_enumerate(spec, m, 6)
    mode = "fast" if _kernel.HAVE_FAST else "pure"
    print(f"{'count_enumerate <6> at m=' + str(m):34s} {mode} {1e3 * (time.perf_counter() - start):10.2f} ms")


if __name__ == "__main__":
    main()
