"""Benchmark the punctual-ideal enumeration backends.

The compiled kernel walks every ordered generator pair; the pure-Python
fallback sweeps principal ideals once and forms pairwise sums.  Both return
identical canonical record sets; this script compares their wall time.

    python benchmarks/bench_backends.py            # quick grid
    python benchmarks/bench_backends.py --full     # include the heavy cells
"""

import argparse
import time

from motivecount.oracle import CURVES, count_punctual_ideals, punctual_pair_space
from motivecount.oracle.counting import _fastcount

QUICK = [(c, 2) for c in range(1, 6)] + [(c, 3) for c in range(1, 4)]
HEAVY = [(6, 2), (4, 3)]


def time_cell(curve, colength, q, backend):
    start = time.perf_counter()
    count = count_punctual_ideals(curve, colength, q, backend=backend)
    return count, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the heavy cells")
    args = parser.parse_args()

    if _fastcount is None:
        print("compiled kernel not built; only the pure backend is available")

    cells = QUICK + (HEAVY if args.full else [])
    header = f"{'cell':>16} {'pairs':>12} {'count':>6} {'pure':>10} {'fast':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for colength, q in cells:
        for curve in CURVES:
            pairs = punctual_pair_space(colength, q)
            count, pure_s = time_cell(curve, colength, q, "pure")
            if _fastcount is not None:
                fast_count, fast_s = time_cell(curve, colength, q, "fast")
                assert fast_count == count, (curve, colength, q)
                speedup = f"{pure_s / fast_s:7.1f}x" if fast_s > 0 else "-"
                fast_txt = f"{fast_s * 1000:9.1f}ms"
            else:
                speedup, fast_txt = "-", "-"
            print(f"{curve + ':' + str(colength) + ':q' + str(q):>16} {pairs:>12} "
                  f"{count:>6} {pure_s * 1000:9.1f}ms {fast_txt:>10} {speedup:>8}")


if __name__ == "__main__":
    main()
