#!/usr/bin/env python3
"""Run every catalogued statement on batches of random instances and print a
summary table of verdicts.

Usage: python3 scripts/run_verification_suite.py [--count N] [--seed S]
       [--time-limit SECONDS] [--jobs J]
"""
import argparse
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from sdepth.poset import Budget
from sdepth.verifier import STATEMENTS, run_random


def one(task):
    statement, seed, time_limit = task
    report = run_random(statement, seed, budget=Budget(time_limit=time_limit))
    return statement, report.verdict


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=25, help="instances per statement")
    parser.add_argument("--seed", type=int, default=0, help="base seed")
    parser.add_argument("--time-limit", type=float, default=30.0)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    tasks = [
        (statement, args.seed + i, args.time_limit)
        for statement in sorted(STATEMENTS)
        for i in range(args.count)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(one, tasks))
    else:
        results = [one(t) for t in tasks]

    counts: dict[str, Counter] = {}
    for statement, verdict in results:
        counts.setdefault(statement, Counter())[verdict] += 1
    verdicts = ["holds", "vacuous", "unknown", "fails"]
    width = max(len(s) for s in STATEMENTS)
    print(f"{'statement':<{width}} " + " ".join(f"{v:>8}" for v in verdicts))
    for statement in sorted(counts):
        row = counts[statement]
        print(f"{statement:<{width}} " + " ".join(f"{row.get(v, 0):>8}" for v in verdicts))
    total_fails = sum(c.get("fails", 0) for c in counts.values())
    print(f"\ntotal fails: {total_fails}")
    return 2 if total_fails else 0


if __name__ == "__main__":
    sys.exit(main())
