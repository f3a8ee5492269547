"""Whole-semigroup properties used as hypotheses by the theorems.

Zero policy: when ``S`` has a zero ``z``, statements quantified over
"non-zero" elements skip ``z`` and the ideal ``{z}`` counts as trivial.
Without a zero every element is quantified and only ``S`` is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import ElemSet, Semigroup, sandwich
from .ideals import IdealKind, enumerate_ideals


def regular_witnesses(S: Semigroup) -> Optional[dict[int, int]]:
    """Map each ``a`` to the least ``x`` with ``a = axa``; None if some ``a`` has none."""
    t = S.table
    out = {}
    for a in range(S.order):
        for x in range(S.order):
            if t[t[a][x]][a] == a:
                out[a] = x
                break
        else:
            return None
    return out


def is_regular(S: Semigroup) -> bool:
    return regular_witnesses(S) is not None


def intra_regular_witnesses(S: Semigroup) -> Optional[dict[int, tuple[int, int]]]:
    """Map each ``a`` to the least pair ``(s, t)`` with ``a = s a^2 t``."""
    t = S.table
    out = {}
    for a in range(S.order):
        sq = t[a][a]
        for s, u in product(range(S.order), repeat=2):
            if t[t[s][sq]][u] == a:
                out[a] = (s, u)
                break
        else:
            return None
    return out


def is_intra_regular(S: Semigroup) -> bool:
    return intra_regular_witnesses(S) is not None


def is_duo(S: Semigroup) -> bool:
    left = set(enumerate_ideals(S, IdealKind.LEFT))
    right = set(enumerate_ideals(S, IdealKind.RIGHT))
    return left == right


def trivial_ideals(S: Semigroup) -> set[ElemSet]:
    out = {S.full}
    if S.zero is not None:
        out.add(S.elems([S.zero]))
    return out


def nonzero(S: Semigroup, A: Optional[ElemSet] = None) -> list[int]:
    """Elements of ``A`` (default: all of ``S``) other than the zero."""
    elems = range(S.order) if A is None else A
    return [a for a in elems if a != S.zero]


def is_interior_simple(S: Semigroup) -> bool:
    trivial = trivial_ideals(S)
    return all(I in trivial for I in enumerate_ideals(S, IdealKind.INTERIOR))


def interior_chain(S: Semigroup) -> bool:
    fam = enumerate_ideals(S, IdealKind.INTERIOR)
    return all(A <= B or B <= A for A in fam for B in fam)


def is_zero_degenerate(S: Semigroup) -> bool:
    """Some non-zero ``a`` has ``SaS = {0}``."""
    if S.zero is None:
        return False
    z = S.elems([S.zero])
    return any(sandwich(S, S.elems([a])) <= z for a in nonzero(S))


@dataclass(frozen=True)
class ClassificationReport:
    regular: bool
    regular_witnesses: Optional[dict[int, int]]
    intra_regular: bool
    intra_regular_witnesses: Optional[dict[int, tuple[int, int]]]
    duo: bool
    interior_simple: bool
    chain: bool
    zero: Optional[int]
    zero_degenerate: bool

    def to_json(self, S: Semigroup) -> dict:
        nm = S.names

        def wmap(w, f):
            return None if w is None else {nm[a]: f(v) for a, v in sorted(w.items())}

        return {
            "regular": self.regular,
            "regularWitnesses": wmap(self.regular_witnesses, lambda x: nm[x]),
            "intraRegular": self.intra_regular,
            "intraRegularWitnesses": wmap(self.intra_regular_witnesses, lambda p: [nm[p[0]], nm[p[1]]]),
            "duo": self.duo,
            "interiorSimple": self.interior_simple,
            "chain": self.chain,
            "zero": None if self.zero is None else nm[self.zero],
            "zeroDegenerate": self.zero_degenerate,
        }


def classify(S: Semigroup) -> ClassificationReport:
    rw = regular_witnesses(S)
    iw = intra_regular_witnesses(S)
    return ClassificationReport(
        regular=rw is not None,
        regular_witnesses=rw,
        intra_regular=iw is not None,
        intra_regular_witnesses=iw,
        duo=is_duo(S),
        interior_simple=is_interior_simple(S),
        chain=interior_chain(S),
        zero=S.zero,
        zero_degenerate=is_zero_degenerate(S),
    )
