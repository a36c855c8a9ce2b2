"""Run every randomized harness over a range of seeds and tabulate the results.

    python3 scripts/run_theorem_checks.py --seeds 1 200 --out results/checks.csv
"""

from __future__ import annotations

import argparse
import csv
import time
from pathlib import Path

from fgtool.checks import CHECKS


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", nargs=2, type=int, default=(1, 50), metavar=("FIRST", "LAST"))
    parser.add_argument("--checks", nargs="*", default=sorted(CHECKS), choices=sorted(CHECKS))
    parser.add_argument("--out", type=Path)
    args = parser.parse_args()

    first, last = args.seeds
    rows = []
    for name in args.checks:
        start = time.perf_counter()
        # one case per seed keeps the table seed-addressable
        cases = [c for s in range(first, last + 1) for c in CHECKS[name](seed=s, count=1).cases]
        elapsed = time.perf_counter() - start
        passed = sum(c.ok for c in cases)
        print(f"{name:10s} {passed:4d}/{len(cases):<4d} {elapsed:7.1f}s")
        for c in cases:
            if not c.ok:
                print(f"    FAIL {c.label}: {c.detail}")
        rows += [{"check": name, "case": c.label, "ok": c.ok, "detail": c.detail} for c in cases]

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with args.out.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=["check", "case", "ok", "detail"])
            writer.writeheader()
            writer.writerows(rows)


if __name__ == "__main__":
    main()
