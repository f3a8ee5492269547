import json

import pytest

from sgideals.core import parse_semigroup
from sgideals.enumeration import all_semigroups
from sgideals.harness import (
    THEOREM_IDS,
    Context,
    erratum_for,
    find_counterexample,
    replay,
    resolve_ids,
    run_suite,
    verify,
)

REQUIRED = """T-IDEAL-IS-INTERIOR T-INTERSECTION T-RELATIVE T-REG-SIS T-REG-EQUIV-QJQ T-REG-EQUIV-BIL
T-REG-COINCIDE T-INTRA-COINCIDE T-INTRA-SEMIPRIME T-INTRA-COMPSEMI-IFF T-DUO-BI T-DUO-QUASI
T-SIMPLE-IFF T-SIRR-SP T-ZORN-WITNESS T-IDEMPOTENT-EQUIV T-CHAIN-EQUIV T-MIN-IFF T-MIN-DISJOINT
T-MIN-INAB T-J-SUB-I T-REG-JI T-MIN-ICLASS T-MIN-JCLASS P-IN-LEAST P-PROD-REG""".split()

# smallest failure of T-J-SUB-I: b and c generate the same two-sided ideal but not the same IN
ORDER5 = parse_semigroup("""elements: a b c d e
table:
a a a a a
a a a a a
a a a a a
a b b d d
a c c e e
""")


def test_registry_covers_required_ids():
    assert set(REQUIRED) <= set(THEOREM_IDS)
    assert len(set(THEOREM_IDS)) == len(THEOREM_IDS)


def test_verify_examples(S3, L2, N2):
    assert verify(S3, "T-INTRA-SEMIPRIME").status == "holds"
    assert verify(L2, "T-SIMPLE-IFF").status == "holds"
    v = verify(N2, "T-SIMPLE-IFF")
    assert v.status == "fails"
    assert v.witness["counterexamples"]["SaS_is_S"] == {"element": N2.index("e"), "SaS": [N2.index("0")]}
    assert "zero-degenerate" in v.flags
    assert erratum_for(v).id == "E1"
    assert replay(v)


def test_skipped_when_hypothesis_fails(N2):
    assert verify(N2, "T-REG-SIS").status == "skipped"


def test_unknown_id(S3):
    with pytest.raises(KeyError):
        verify(S3, "T-NOPE")
    with pytest.raises(KeyError):
        resolve_ids("T-MIN-IFF,T-NOPE")


def test_resolve_ids():
    assert resolve_ids("all") == list(THEOREM_IDS)
    assert resolve_ids("T-MIN-IFF, T-REG-SIS") == ["T-MIN-IFF", "T-REG-SIS"]


def test_naive_context_agrees_order_3():
    for S in all_semigroups(3, up_to_iso=True):
        fast, slow = Context(S), Context(S, naive=True)
        for tid in THEOREM_IDS:
            a, b = verify(S, tid, fast), verify(S, tid, slow)
            assert (a.status, a.witness, a.flags) == (b.status, b.witness, b.flags), tid


def test_suite_order_2_only_errata():
    report = run_suite(all_semigroups(2))
    assert report.clean
    assert report.count == 8 and report.order == 2
    fails = {t.id: t.fails for t in report.tallies if t.fails}
    assert set(fails) <= {"T-SIMPLE-IFF", "T-MIN-IFF"}
    for t in report.tallies:
        for w in t.witnesses:
            assert w["detail"]["erratum"] in {"E1", "E2"} and w["detail"]["replayed"]


def test_suite_single_theorem(S3):
    report = run_suite([S3], ["T-MIN-ICLASS"])
    (t,) = report.tallies
    assert (t.holds, t.fails, t.skipped) == (1, 0, 0)


def test_suite_empty_corpus():
    report = run_suite([], ["T-MIN-IFF", "T-REG-SIS"])
    assert report.count == 0
    assert all(t.holds == t.fails == t.skipped == 0 for t in report.tallies)


def test_suite_jobs_preserve_output():
    corpus = all_semigroups(2)
    assert run_suite(corpus, jobs=1).dumps() == run_suite(corpus, jobs=2).dumps()


def test_monotone_scope():
    corpus = all_semigroups(2)
    alone = run_suite(corpus, ["T-MIN-IFF"]).to_json()["theorems"][0]
    mixed = {t["id"]: t for t in run_suite(corpus, ["T-REG-SIS", "T-MIN-IFF"]).to_json()["theorems"]}
    assert mixed["T-MIN-IFF"] == alone


def test_report_is_json_stable():
    text = run_suite(all_semigroups(2)).dumps()
    assert json.loads(text)["schema"] == 1
    assert text == run_suite(all_semigroups(2)).dumps()


def test_find_counterexample_examples():
    assert find_counterexample("T-IDEAL-IS-INTERIOR", 3) is None
    S, w = find_counterexample("T-SIMPLE-IFF", 2)
    assert S.table == ((0, 0), (0, 0))
    assert w["counterexamples"]["SaS_is_S"] == {"element": 1, "SaS": [0]}
    assert find_counterexample("T-J-SUB-I", 3) is None


def test_find_counterexample_errors():
    with pytest.raises(ValueError):
        find_counterexample("T-MIN-IFF", 7)
    with pytest.raises(KeyError):
        find_counterexample("T-NOPE", 2)


def test_j_not_inside_i_at_order_5():
    v = verify(ORDER5, "T-J-SUB-I")
    assert v.status == "fails"
    assert (v.witness["a"], v.witness["b"]) == (1, 2)
    assert v.witness["IN_a"] == [0, 1] and v.witness["IN_b"] == [0, 2]
    assert replay(v)
    assert erratum_for(v).id == "E3"
    S, _ = find_counterexample("T-J-SUB-I", 5, "up_to_iso")
    assert S.table == ORDER5.table


def test_in_least_holds_order_3():
    for S in all_semigroups(3):
        assert verify(S, "P-IN-LEAST").status == "holds"
