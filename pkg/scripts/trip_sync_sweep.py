#!/usr/bin/env python3
"""Sweep the trip-synchronization check across strut constants.

Examples:
    python scripts/trip_sync_sweep.py -n 5
    python scripts/trip_sync_sweep.py -n 6 --s-range 1-8,17
    python scripts/trip_sync_sweep.py -n 6 --s-range 25-31 --failures-only
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from boxkites.emanation import trip_sync_sweep  # noqa: E402


def parse_s_range(text):
    values = set()
    for piece in text.split(","):
        if "-" in piece:
            lo, hi = piece.split("-")
            values.update(range(int(lo), int(hi) + 1))
        else:
            values.add(int(piece))
    return sorted(values)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", "--dim-exponent", type=int, default=5,
                        help="algebra level: dimension is 2^n (default 5)")
    parser.add_argument("--s-range", default=None,
                        help="strut constants, e.g. 1-8,17 (default: all)")
    parser.add_argument("--failures-only", action="store_true",
                        help="print only kites where the pattern breaks")
    args = parser.parse_args()

    s_values = parse_s_range(args.s_range) if args.s_range else None
    start = time.time()
    report = trip_sync_sweep(args.dim_exponent, s_values)
    elapsed = time.time() - start

    for entry in report.entries:
        if args.failures_only and entry.passed:
            continue
        verdict = "pass" if entry.passed else "FAIL"
        line = f"n={entry.n} s={entry.s:>3} ABC={entry.abc_lows} {verdict}"
        if entry.counterexamples:
            trips = "; ".join(str(t) for t in entry.counterexamples)
            line += f"  counterexamples: {trips}"
        print(line)

    passed = sum(e.passed for e in report.entries)
    print(f"\n{passed}/{report.kite_count} kites satisfy trip-sync "
          f"(n={args.dim_exponent}, {len(report.s_values)} strut constants, "
          f"{elapsed:.1f}s)")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
