"""Compare the J and IN partitions over every semigroup of a given order.

Reports how often J is contained in IN, the reverse, equality, and prints
the semigroups where J is not contained in IN.
"""

import argparse

from sgideals.core import serialize_semigroup
from sgideals.enumeration import EnumerationConfig, enumerate_semigroups
from sgideals.green import Relation, green_partition, refines


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=5)
    ap.add_argument("--labeled", action="store_true", help="do not quotient by isomorphism")
    args = ap.parse_args()

    cfg = EnumerationConfig(args.order, "labeled" if args.labeled else "up_to_iso")
    total = equal = j_in_i = i_in_j = 0
    bad = []
    for S in enumerate_semigroups(cfg):
        J, I = green_partition(S, Relation.J), green_partition(S, Relation.I)
        total += 1
        a, b = refines(J, I), refines(I, J)
        j_in_i += a
        i_in_j += b
        equal += a and b
        if not a:
            bad.append(S)

    print(f"order {args.order}: {total} semigroups")
    print(f"  J = I: {equal}   J in I: {j_in_i}   I in J: {i_in_j}   J not in I: {len(bad)}")
    for S in bad:
        print("---")
        print(serialize_semigroup(S), end="")


if __name__ == "__main__":
    main()
