"""The six ideal kinds, principal constructions, and family enumeration."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .core import (
    ElemSet,
    PreconditionError,
    Semigroup,
    induced,
    is_subsemigroup,
    product_of,
    sandwich,
    subset_product,
)


class IdealKind(Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"
    QUASI = "quasi"
    BI = "bi"
    INTERIOR = "interior"


class PrincipalKind(Enum):
    L = "L"    # Sa u {a}
    R = "R"    # aS u {a}
    I = "I"    # {a} u Sa u aS u SaS
    IN = "IN"  # {a} u {a^2} u SaS


def is_ideal_of_kind(S: Semigroup, A: ElemSet, kind: IdealKind) -> bool:
    """Decide whether the non-empty subset ``A`` is an ideal of ``kind``.

    Quasi- and bi-ideals are required to be subsemigroups, as are interior
    ideals.  For quasi-ideals the requirement is automatic (``AA`` lies in
    ``AS n SA``) but it is checked anyway.
    """
    if not A:
        raise PreconditionError("ideals are non-empty", "empty")
    full = S.full
    if kind is IdealKind.LEFT:
        return subset_product(S, full, A) <= A
    if kind is IdealKind.RIGHT:
        return subset_product(S, A, full) <= A
    if kind is IdealKind.TWO_SIDED:
        return subset_product(S, full, A) <= A and subset_product(S, A, full) <= A
    if not is_subsemigroup(S, A):
        return False
    if kind is IdealKind.QUASI:
        return subset_product(S, A, full) & subset_product(S, full, A) <= A
    if kind is IdealKind.BI:
        return product_of(S, A, full, A) <= A
    if kind is IdealKind.INTERIOR:
        return sandwich(S, A) <= A
    raise ValueError(f"unknown ideal kind {kind!r}")


def principal(S: Semigroup, a: int, kind: PrincipalKind) -> ElemSet:
    if not 0 <= a < S.order:
        raise ValueError(f"element index {a} out of range")
    one = S.elems([a])
    full = S.full
    if kind is PrincipalKind.L:
        return subset_product(S, full, one) | one
    if kind is PrincipalKind.R:
        return subset_product(S, one, full) | one
    if kind is PrincipalKind.I:
        return one | subset_product(S, full, one) | subset_product(S, one, full) | sandwich(S, one)
    if kind is PrincipalKind.IN:
        return one | S.elems([S.mul(a, a)]) | sandwich(S, one)
    raise ValueError(f"unknown principal kind {kind!r}")


@lru_cache(maxsize=16384)
def _family(S: Semigroup, kind: IdealKind) -> tuple[ElemSet, ...]:
    n = S.order
    out = []
    needs_closure = kind in (IdealKind.QUASI, IdealKind.BI, IdealKind.INTERIOR)
    for bits in range(1, 1 << n):
        A = ElemSet(bits, n)
        if needs_closure and not is_subsemigroup(S, A):
            continue
        if is_ideal_of_kind(S, A, kind):
            out.append(A)
    return tuple(out)


def enumerate_ideals(S: Semigroup, kind: IdealKind) -> list[ElemSet]:
    """Every ideal of ``kind``, in ascending bit-vector order."""
    return list(_family(S, kind))


@lru_cache(maxsize=16384)
def _subsemigroups(S: Semigroup) -> tuple[ElemSet, ...]:
    n = S.order
    return tuple(
        ElemSet(bits, n) for bits in range(1, 1 << n) if is_subsemigroup(S, ElemSet(bits, n))
    )


def enumerate_subsemigroups(S: Semigroup) -> list[ElemSet]:
    return list(_subsemigroups(S))


def relative_interior_check(S: Semigroup, I: ElemSet, T: ElemSet) -> bool:
    """Is ``I n T`` an interior ideal of the subsemigroup ``T``?

    The check runs in the multiplication table induced on ``T``.
    """
    if not I or not is_ideal_of_kind(S, I, IdealKind.INTERIOR):
        raise PreconditionError("I is not an interior ideal of S", "not-interior")
    if not T or not is_subsemigroup(S, T):
        raise PreconditionError("T is not a subsemigroup of S", "not-subsemigroup")
    meet = I & T
    if not meet:
        raise PreconditionError("I n T is empty", "empty-intersection")
    sub, members = induced(S, T)
    local = sub.elems(i for i, x in enumerate(members) if x in meet)
    return is_ideal_of_kind(sub, local, IdealKind.INTERIOR)
