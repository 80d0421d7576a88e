#!/usr/bin/env python3
"""Tabulate sdepth and depth across powers of an ideal from a file.

Usage: python3 scripts/power_tables.py IDEAL_FILE [--n-max N] [--time-limit S]
"""
import argparse
import sys

from sdepth.parsing import parse_ideal
from sdepth.poset import Budget
from sdepth.verifier import depth_sequence, sdepth_sequence


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("path")
    parser.add_argument("--n-max", type=int, default=3)
    parser.add_argument("--time-limit", type=float, default=60.0)
    args = parser.parse_args()

    with open(args.path) as fh:
        ideal = parse_ideal(fh.read())
    budget = Budget(time_limit=args.time_limit)

    print(f"L = {', '.join(str(g) for g in ideal.gens)}  "
          f"in {ideal.context.arity} variables\n")
    for kind, rows in (
        ("sdepth", sdepth_sequence(ideal, args.n_max, budget=budget)),
        ("depth", depth_sequence(ideal, args.n_max, budget=budget)),
    ):
        print(f"{'n':>3} {kind + '(R/L^n)':>16} {kind + '(L^n)':>14} {kind + '(L^n/L^n+1)':>18}")
        for row in rows:
            print(f"{row.n:>3} {str(row.ring_quotient):>16} "
                  f"{str(row.ideal_power):>14} {str(row.shell):>18}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
