"""Scan irreducible decompositions of chi_n^k for the onset of stability.

For fixed k the decomposition labels, with their padding first part removed,
eventually stop changing as n grows.  This prints the tail multiset for each
n and marks where it first agrees with the next row, e.g.:

    python3 scripts/stability_scan.py --k 2 --max-n 10
"""

import argparse

from braidchar import a_character, decompose
from braidchar.partitions import format_partition


def tail_string(tail):
    def key(mu):
        return (-sum(mu), mu)

    pieces = []
    for mu in sorted(tail, key=key, reverse=True):
        m = tail[mu]
        label = format_partition(mu) or "-"
        pieces.append(f"[{label}]" if m == 1 else f"{m}[{label}]")
    return " + ".join(pieces) if pieces else "0"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, default=1, help="cohomology grade")
    parser.add_argument("--max-n", type=int, default=9, help="largest n to scan")
    args = parser.parse_args(argv)
    if args.k < 1 or args.max_n < args.k + 1:
        parser.error("need k >= 1 and max-n > k")

    tails = {}
    for n in range(args.k + 1, args.max_n + 1):
        tails[n] = decompose(a_character(n, args.k)).tail_multiset()

    print(f"tail multisets of chi_n^{args.k} (labels with first part dropped)")
    previous = None
    for n, tail in tails.items():
        marker = "  = previous" if tail == previous else ""
        print(f"n={n:2d}  {tail_string(tail)}{marker}")
        previous = tail


if __name__ == "__main__":
    main()
