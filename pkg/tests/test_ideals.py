import pytest

from sgideals.core import ElemSet, PreconditionError, Semigroup
from sgideals.enumeration import all_semigroups
from sgideals.ideals import (
    IdealKind,
    PrincipalKind,
    enumerate_ideals,
    enumerate_subsemigroups,
    is_ideal_of_kind,
    principal,
    relative_interior_check,
)

import oracles

K = IdealKind
UP_TO_3 = [S for n in (1, 2, 3) for S in all_semigroups(n)]


def table(S):
    return [list(r) for r in S.table]


def test_example2_interior(S3):
    assert is_ideal_of_kind(S3, S3.subset("a", "b"), K.INTERIOR)
    assert not is_ideal_of_kind(S3, S3.subset("b"), K.INTERIOR)


def test_left_zero_one_sided(L2):
    x = L2.subset("x")
    assert is_ideal_of_kind(L2, x, K.RIGHT)
    assert not is_ideal_of_kind(L2, x, K.LEFT)
    assert not is_ideal_of_kind(L2, x, K.INTERIOR)


@pytest.mark.parametrize("kind", list(K))
def test_full_carrier_is_every_kind(kind):
    for S in UP_TO_3:
        assert is_ideal_of_kind(S, S.full, kind)


def test_empty_rejected(S3):
    with pytest.raises(PreconditionError):
        is_ideal_of_kind(S3, S3.empty, K.LEFT)


def test_quasi_requires_subsemigroup_and_is_automatic():
    # any non-empty Q with QS n SQ in Q is closed, so the explicit closure
    # requirement never changes the quasi family
    for S in UP_TO_3:
        t = table(S)
        for A in oracles.subsets(S.order):
            S_ = oracles.full(t)
            loose = oracles.prod(t, A, S_) & oracles.prod(t, S_, A) <= A
            assert loose == is_ideal_of_kind(S, S.elems(A), K.QUASI)


def test_principal_examples(S3):
    b = S3.index("b")
    assert principal(S3, b, PrincipalKind.IN) == S3.subset("a", "b")
    assert principal(S3, S3.index("a"), PrincipalKind.IN) == S3.subset("a")
    assert principal(S3, b, PrincipalKind.L) == S3.subset("a", "b")


def test_enumerate_example2(S3):
    expect = [S3.subset("a"), S3.subset("a", "b"), S3.subset("a", "c"), S3.full]
    assert enumerate_ideals(S3, K.INTERIOR) == expect
    assert enumerate_ideals(S3, K.TWO_SIDED) == expect


def test_enumerate_left_zero(L2):
    assert enumerate_ideals(L2, K.INTERIOR) == [L2.full]


@pytest.mark.parametrize("kind", list(K))
def test_enumeration_agrees_with_naive_scan(kind):
    for S in UP_TO_3:
        got = [set(A) for A in enumerate_ideals(S, kind)]
        want = oracles.family(table(S), kind.value)
        assert sorted(map(sorted, got)) == sorted(map(sorted, want))
        bits = [A.bits for A in enumerate_ideals(S, kind)]
        assert bits == sorted(bits)
        assert bits[-1] == S.full.bits


def test_hierarchy_order_3():
    for S in UP_TO_3:
        for bits in range(1, 1 << S.order):
            A = ElemSet(bits, S.order)
            k = {kind: is_ideal_of_kind(S, A, kind) for kind in K}
            assert not k[K.TWO_SIDED] or k[K.INTERIOR]
            assert not k[K.LEFT] or k[K.QUASI]
            assert not k[K.RIGHT] or k[K.QUASI]
            assert not k[K.QUASI] or k[K.BI]


def test_intersection_closure():
    for S in UP_TO_3:
        fam = enumerate_ideals(S, K.INTERIOR)
        for A in fam:
            for B in fam:
                if A & B:
                    assert is_ideal_of_kind(S, A & B, K.INTERIOR)


@pytest.mark.parametrize("pk, kind", [
    (PrincipalKind.L, K.LEFT), (PrincipalKind.R, K.RIGHT), (PrincipalKind.I, K.TWO_SIDED)])
def test_principal_is_least(pk, kind):
    for S in UP_TO_3:
        for a in range(S.order):
            P = principal(S, a, pk)
            assert a in P and is_ideal_of_kind(S, P, kind)
            assert all(P <= A for A in enumerate_ideals(S, kind) if a in A)


def test_principal_interior_is_interior():
    for S in UP_TO_3:
        t = table(S)
        for a in range(S.order):
            P = principal(S, a, PrincipalKind.IN)
            assert set(P) == oracles.IN(t, a)
            assert is_ideal_of_kind(S, P, K.INTERIOR)


def test_relative_examples(S3):
    assert relative_interior_check(S3, S3.subset("a", "b"), S3.subset("a", "c"))
    assert relative_interior_check(S3, S3.subset("a"), S3.subset("a"))
    assert relative_interior_check(S3, S3.subset("a", "b"), S3.subset("b"))


def test_relative_precondition_reasons(S3):
    with pytest.raises(PreconditionError) as info:
        relative_interior_check(S3, S3.subset("b"), S3.full)
    assert info.value.reason == "not-interior"
    with pytest.raises(PreconditionError) as info:
        relative_interior_check(S3, S3.full, S3.subset("b", "c"))
    assert info.value.reason == "not-subsemigroup"


def test_relative_empty_intersection():
    S = Semigroup.from_table([[0, 0], [0, 1]])  # zero a, idempotent b
    with pytest.raises(PreconditionError) as info:
        relative_interior_check(S, S.elems([0]), S.elems([1]))
    assert info.value.reason == "empty-intersection"


def test_relative_check_holds_exhaustively():
    for S in UP_TO_3:
        subs = enumerate_subsemigroups(S)
        for I in enumerate_ideals(S, K.INTERIOR):
            for T in subs:
                if I & T:
                    assert relative_interior_check(S, I, T)


def test_subsemigroups_match_oracle():
    for S in UP_TO_3:
        t = table(S)
        want = [A for A in oracles.subsets(S.order) if oracles.is_subsemigroup(t, A)]
        got = [set(A) for A in enumerate_subsemigroups(S)]
        assert sorted(map(sorted, got)) == sorted(map(sorted, want))
