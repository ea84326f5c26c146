"""Time the square-free census against the cycle-polynomial predictions.

Runs every (p, n) grid with p in --primes and p**n <= --limit, checks the
counts, and prints one timing row per grid:

    python3 scripts/oracle_benchmark.py --limit 100000 --workers 4
"""

import argparse
import time

from braidchar import census_vs_theory
from braidchar.fforacle import DEFAULT_BUDGET


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    parser.add_argument("--limit", type=int, default=10**6,
                        help="largest candidate count p**n to enumerate")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel workers for the vector engine")
    args = parser.parse_args(argv)
    if args.limit > DEFAULT_BUDGET:
        parser.error(f"--limit above the enumeration budget {DEFAULT_BUDGET}")

    print(f"{'p':>3} {'n':>3} {'candidates':>11} {'squarefree':>11} "
          f"{'classes':>8} {'seconds':>8}  status")
    grand_start = time.perf_counter()
    failures = 0
    for p in args.primes:
        n = 1
        while p**n <= args.limit:
            start = time.perf_counter()
            report = census_vs_theory(p, n, workers=args.workers)
            elapsed = time.perf_counter() - start
            status = "ok" if report.all_ok else "MISMATCH"
            failures += 0 if report.all_ok else 1
            print(f"{p:>3} {n:>3} {p**n:>11} {report.total_squarefree:>11} "
                  f"{len(report.rows):>8} {elapsed:>8.3f}  {status}")
            n += 1
    total = time.perf_counter() - grand_start
    print(f"total {total:.2f}s, {failures} mismatching grids")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
