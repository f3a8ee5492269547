"""Green's relations and the relation defined by principal interior ideals."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import ElemSet, PreconditionError, Semigroup
from .ideals import IdealKind, PrincipalKind, is_ideal_of_kind, principal


class Relation(Enum):
    L = "L"
    R = "R"
    J = "J"
    H = "H"
    I = "I"  # a ~ b iff IN(a) = IN(b)


_GENERATOR = {
    Relation.L: PrincipalKind.L,
    Relation.R: PrincipalKind.R,
    Relation.J: PrincipalKind.I,
    Relation.I: PrincipalKind.IN,
}


@dataclass(frozen=True)
class RelationPartition:
    relation: Relation
    classes: tuple[ElemSet, ...]

    @property
    def order(self) -> int:
        return self.classes[0].n

    def class_of(self, a: int) -> ElemSet:
        for C in self.classes:
            if a in C:
                return C
        raise ValueError(f"element {a} not covered")

    def to_json(self, S: Semigroup) -> list[list[str]]:
        return [S.tokens(C) for C in self.classes]


def _group(S: Semigroup, key) -> tuple[ElemSet, ...]:
    buckets: dict = {}
    for a in range(S.order):
        buckets.setdefault(key(a), []).append(a)
    classes = [S.elems(members) for members in buckets.values()]
    return tuple(sorted(classes, key=lambda C: C.indices()[0]))


def green_partition(S: Semigroup, relation: Relation) -> RelationPartition:
    if relation is Relation.H:
        L = green_partition(S, Relation.L)
        R = green_partition(S, Relation.R)
        classes = _group(S, lambda a: (L.class_of(a).bits, R.class_of(a).bits))
    else:
        kind = _GENERATOR[relation]
        classes = _group(S, lambda a: principal(S, a, kind).bits)
    return RelationPartition(relation, classes)


def green_partitions(S: Semigroup) -> dict[Relation, RelationPartition]:
    return {r: green_partition(S, r) for r in Relation}


def refines(p: RelationPartition, q: RelationPartition) -> bool:
    """True iff ``p``'s relation is contained in ``q``'s."""
    if p.order != q.order:
        raise ValueError(f"partitions of different orders ({p.order} vs {q.order})")
    return all(any(C <= D for D in q.classes) for C in p.classes)


def minimal_ideal_is_class(S: Semigroup, I: ElemSet, relation: Relation = Relation.I,
                           zero_aware: bool = False) -> bool:
    """Does the interior ideal ``I`` coincide with one class of ``relation``?

    With ``zero_aware`` the zero is set aside: an ideal ``{0} u C`` also
    counts when ``C`` is a class.
    """
    if not I or not is_ideal_of_kind(S, I, IdealKind.INTERIOR):
        raise PreconditionError("not an interior ideal", "not-interior")
    classes = green_partition(S, relation).classes
    if I in classes:
        return True
    if zero_aware and S.zero is not None and S.zero in I:
        return (I - S.elems([S.zero])) in classes
    return False
