"""Count semigroups of each order, labeled and up to isomorphism, with timings."""

import argparse
import time

from sgideals.enumeration import EnumerationConfig, enumerate_semigroups


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--iso-max-order", type=int, default=5)
    args = ap.parse_args()

    for n in range(1, max(args.max_order, args.iso_max_order) + 1):
        row = [f"order {n}"]
        for dedup, limit in (("labeled", args.max_order), ("up_to_iso", args.iso_max_order)):
            if n > limit:
                row.append(f"{dedup}: -")
                continue
            start = time.perf_counter()
            count = sum(1 for _ in enumerate_semigroups(EnumerationConfig(n, dedup)))
            row.append(f"{dedup}: {count} ({time.perf_counter() - start:.2f}s)")
        print("  ".join(row))


if __name__ == "__main__":
    main()
