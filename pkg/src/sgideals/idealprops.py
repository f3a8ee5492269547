"""Prime, semiprime, irreducible and minimal interior ideals.

Every quantifier "for any interior ideal" ranges over the enumerated
interior-ideal family of ``S``.  Functions accept that family as an optional
argument so a caller sweeping many ideals computes it once.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .core import ElemSet, PreconditionError, Semigroup, subset_product
from .ideals import IdealKind, enumerate_ideals, is_ideal_of_kind


def _fam(S: Semigroup, family: Optional[Sequence[ElemSet]]) -> Sequence[ElemSet]:
    return enumerate_ideals(S, IdealKind.INTERIOR) if family is None else family


def _require_interior(S: Semigroup, I: ElemSet):
    if not I or not is_ideal_of_kind(S, I, IdealKind.INTERIOR):
        raise PreconditionError("not an interior ideal", "not-interior")


def is_semiprime(S, I, family=None) -> bool:
    return all(A <= I for A in _fam(S, family) if subset_product(S, A, A) <= I)


def is_completely_semiprime(S, I) -> bool:
    return all(a in I for a in range(S.order) if S.mul(a, a) in I)


def is_prime(S, I, family=None) -> bool:
    fam = _fam(S, family)
    for A in fam:
        for B in fam:
            if subset_product(S, A, B) <= I and not (A <= I or B <= I):
                return False
    return True


def is_strongly_prime(S, I, family=None) -> bool:
    fam = _fam(S, family)
    for A in fam:
        for B in fam:
            both = subset_product(S, A, B) & subset_product(S, B, A)
            if both <= I and not (A <= I or B <= I):
                return False
    return True


def is_irreducible(S, I, family=None) -> bool:
    fam = _fam(S, family)
    return all(A == I or B == I for A in fam for B in fam if A & B == I)


def is_strongly_irreducible(S, I, family=None) -> bool:
    fam = _fam(S, family)
    return all(A <= I or B <= I for A in fam for B in fam if A & B <= I)


def is_minimal(S, I, family=None) -> bool:
    """No interior ideal other than ``{0}`` sits strictly inside ``I``."""
    zero = None if S.zero is None else S.elems([S.zero])
    return not any(J < I and J != zero for J in _fam(S, family))


def is_idempotent(S, I) -> bool:
    return subset_product(S, I, I) == I


@dataclass(frozen=True)
class IdealProfile:
    elements: ElemSet
    is_proper: bool
    semiprime: bool
    completely_semiprime: bool
    prime: bool
    strongly_prime: bool
    irreducible: bool
    strongly_irreducible: bool
    minimal: bool
    idempotent: bool

    def to_json(self, S: Semigroup) -> dict:
        d = asdict(self)
        d["elements"] = S.tokens(self.elements)
        d["proper"] = d.pop("is_proper")
        return {_camel(k): v for k, v in d.items()}


def _camel(key: str) -> str:
    head, *rest = key.split("_")
    return head + "".join(w.title() for w in rest)


def profile(S: Semigroup, I: ElemSet, family=None) -> IdealProfile:
    _require_interior(S, I)
    fam = _fam(S, family)
    return IdealProfile(
        elements=I,
        is_proper=I != S.full,
        semiprime=is_semiprime(S, I, fam),
        completely_semiprime=is_completely_semiprime(S, I),
        prime=is_prime(S, I, fam),
        strongly_prime=is_strongly_prime(S, I, fam),
        irreducible=is_irreducible(S, I, fam),
        strongly_irreducible=is_strongly_irreducible(S, I, fam),
        minimal=is_minimal(S, I, fam),
        idempotent=is_idempotent(S, I),
    )


def profiles(S: Semigroup) -> list[IdealProfile]:
    fam = enumerate_ideals(S, IdealKind.INTERIOR)
    return [profile(S, I, fam) for I in fam]


def irreducible_witness(S: Semigroup, I: ElemSet, a: int, family=None) -> ElemSet:
    """An irreducible interior ideal containing ``I`` but not ``a``.

    Takes the inclusion-maximal members of the family of interior ideals
    that contain ``I`` and avoid ``a``; ties go to the smallest bit-vector.
    The result is re-checked for irreducibility before it is returned.
    """
    _require_interior(S, I)
    if a in I:
        raise PreconditionError("the excluded element lies in I", "element-in-ideal")
    fam = _fam(S, family)
    avoiding = [J for J in fam if I <= J and a not in J]
    maximal = [J for J in avoiding if not any(J < K for K in avoiding)]
    B = min(maximal, key=lambda J: J.bits)
    if not is_irreducible(S, B, fam):
        raise AssertionError(f"maximal avoiding ideal {B} is not irreducible")
    return B


def decompose_into_irreducibles(S: Semigroup, I: ElemSet, family=None) -> tuple[list[ElemSet], ElemSet]:
    """Proper irreducible interior ideals containing ``I``, and their intersection.

    The intersection of an empty list is ``S``.
    """
    _require_interior(S, I)
    if I == S.full:
        raise PreconditionError("I is not proper", "not-proper")
    fam = _fam(S, family)
    irr = [J for J in fam if I <= J and J != S.full and is_irreducible(S, J, fam)]
    meet = S.full
    for J in irr:
        meet = meet & J
    return irr, meet
