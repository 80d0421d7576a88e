#!/usr/bin/env python3
"""Extended-tier benchmark: Stanley depth of the six-variable ideal in
ideals/example210.ideal, as the ideal and as the quotient ring.

Usage: python3 scripts/benchmark_sdepth.py [--time-limit S] [--cell-cap C]
"""
import argparse
import pathlib
import sys
import time

from sdepth.core import QuotientModule
from sdepth.parsing import parse_ideal
from sdepth.poset import Budget, sdepth_exact

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--time-limit", type=float, default=3600.0)
    parser.add_argument("--cell-cap", type=int, default=10**7)
    args = parser.parse_args()

    ideal = parse_ideal((ROOT / "ideals" / "example210.ideal").read_text())
    budget = Budget(time_limit=args.time_limit, cell_cap=args.cell_cap)
    for label, module in (
        ("sdepth(A/I)", QuotientModule.of_quotient_ring(ideal)),
        ("sdepth(I)", QuotientModule.of_ideal(ideal)),
    ):
        start = time.monotonic()
        result = sdepth_exact(module, budget=budget)
        elapsed = time.monotonic() - start
        if result.status == "exact":
            print(f"{label} = {result.value}  "
                  f"({result.nodes} nodes, {elapsed:.1f}s)")
        else:
            print(f"{label} in [{result.lo}, {result.hi}]  "
                  f"(budget exhausted after {elapsed:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
