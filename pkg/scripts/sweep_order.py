"""Run every registered theorem over all semigroups of one order and summarize.

Writes the full JSON report to --out when given.
"""

import argparse
import time
from pathlib import Path

from sgideals.enumeration import EnumerationConfig, enumerate_semigroups
from sgideals.harness import THEOREM_IDS, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=3)
    ap.add_argument("--up-to-iso", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    dedup = "up_to_iso" if args.up_to_iso else "labeled"
    start = time.perf_counter()
    corpus = list(enumerate_semigroups(EnumerationConfig(args.order, dedup)))
    report = run_suite(corpus, THEOREM_IDS, dedup=dedup, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    print(f"{report.count} semigroups of order {args.order} ({dedup}), {elapsed:.1f}s")
    for t in report.tallies:
        if t.fails:
            by_erratum = {}
            for w in t.witnesses:
                key = w["detail"]["erratum"] or "unexplained"
                by_erratum[key] = by_erratum.get(key, 0) + 1
            print(f"  {t.id}: {t.fails} fails {by_erratum}")
    print("clean" if report.clean else f"unexplained: {len(report.unexplained)}")
    if args.out:
        args.out.write_text(report.dumps())


if __name__ == "__main__":
    main()
