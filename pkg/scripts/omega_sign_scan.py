#!/usr/bin/env python3
"""Print the ω_k sign pattern for every V_m⊗V_n up to a bound.

Each cell shows the sign sequence (ω_0, ω_1, ..., ω_min(m,n)) at the given
q, r — a quick visual that the alternation +,-,+,... (or its flip when
qr < 0) holds across the whole grid.

Usage: python scripts/omega_sign_scan.py [--max N] [--q Q] [--r R]
"""

import argparse
import sys
from fractions import Fraction

from sl2forms.omega import omega_table
from sl2forms.rationals import format_rational

SIGN_CHAR = {1: "+", -1: "-", 0: "0"}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=8, help="bound on m, n (default 8)")
    parser.add_argument("--q", type=Fraction, default=Fraction(1))
    parser.add_argument("--r", type=Fraction, default=Fraction(1))
    args = parser.parse_args()
    if not args.q or not args.r:
        parser.error("q and r must be nonzero")

    width = args.max + 2
    print(f"sign(ω_k) sequences, q={format_rational(args.q)}, r={format_rational(args.r)}")
    header = "m\\n".ljust(6) + "".join(str(n).ljust(width) for n in range(args.max + 1))
    print(header)
    for m in range(args.max + 1):
        cells = []
        for n in range(args.max + 1):
            rows = omega_table(m, n, args.q, args.r).rows
            cells.append("".join(SIGN_CHAR[row.sign] for row in rows).ljust(width))
        print(str(m).ljust(6) + "".join(cells))
    return 0


if __name__ == "__main__":
    sys.exit(main())
