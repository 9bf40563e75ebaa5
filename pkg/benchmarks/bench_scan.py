"""Time the exhaustive labelled-graph scan on the numba and numpy backends.

    python3 benchmarks/bench_scan.py --n 6 7 --repeat 3 --threads 1

The numba kernel is compiled (or loaded from cache) in a warm-up call on a
tiny range before timing. Both backends must produce identical arrays; the
script checks that and exits non-zero otherwise.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

import numpy as np

from sombor._accel import HAVE_NUMBA
from sombor.kernels import scan_all, scan_range


def time_scan(n: int, backend: str, threads: int, repeat: int):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = scan_all(n, backend, threads)
        times.append(time.perf_counter() - t0)
    return result, times


def same(a, b) -> bool:
    return all(np.array_equal(getattr(a, f), getattr(b, f))
               for f in ("so", "connected", "kappa", "kappa_edge", "edges"))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args(argv)

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if HAVE_NUMBA:
        scan_range(4, 0, 8, "numba")
    else:
        print("numba not installed; timing the numpy backend only")

    print(f"{'n':>2} {'masks':>9} {'backend':>7} {'median s':>9} {'min s':>8} {'Mmask/s':>8}")
    ok = True
    for n in args.n:
        results = {}
        for b in backends:
            res, times = time_scan(n, b, args.threads, args.repeat)
            results[b] = res
            med = statistics.median(times)
            masks = res.so.size
            print(f"{n:>2} {masks:>9} {b:>7} {med:>9.3f} {min(times):>8.3f} {masks / med / 1e6:>8.2f}")
        if len(results) == 2 and not same(results["numpy"], results["numba"]):
            print(f"n={n}: backends disagree", file=sys.stderr)
            ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
