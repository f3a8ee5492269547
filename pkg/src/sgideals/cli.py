"""Command line front end.

Exit codes: 0 success, 1 usage or input error, 2 when ``verify`` finds a
failure outside the documented errata or ``counterexample`` finds one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .classify import classify
from .core import AssociativityError, Semigroup, SemigroupError, parse_semigroup
from .enumeration import EnumerationConfig, enumerate_semigroups, parse_catalog, serialize_semigroup
from .green import green_partitions
from .harness import THEOREMS, erratum_for, find_counterexample, resolve_ids, run_suite, verify
from .idealprops import profiles
from .ideals import IdealKind, enumerate_ideals


class UsageError(Exception):
    pass


def _load(path: str) -> Semigroup:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return parse_semigroup(text)
    except SemigroupError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _fmt_set(S: Semigroup, A) -> str:
    return "{" + ",".join(S.tokens(A)) + "}"


def cmd_validate(args) -> int:
    path = args.file
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        S = parse_semigroup(text)
    except AssociativityError as exc:
        v, names = exc.violation, list(exc.names)
        triple = [names[v.i], names[v.j], names[v.k]]
        if args.json:
            _emit({"valid": False, "order": len(names), "elements": names, "zero": None,
                   "associative": False,
                   "violation": {"triple": triple, "lhs": names[v.lhs], "rhs": names[v.rhs]},
                   "error": str(exc)})
        else:
            print(f"order: {len(names)}")
            print("associative: no")
            print(f"violation: ({','.join(triple)}) lhs = {names[v.lhs]} rhs = {names[v.rhs]}")
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 1
    except SemigroupError as exc:
        if args.json:
            _emit({"valid": False, "order": None, "elements": None, "zero": None,
                   "associative": None, "violation": None, "error": str(exc)})
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 1
    zero = None if S.zero is None else S.names[S.zero]
    if args.json:
        _emit({"valid": True, "order": S.order, "elements": list(S.names), "zero": zero,
               "associative": True, "violation": None})
    else:
        print(f"order: {S.order}")
        print(f"zero: {zero if zero is not None else 'none'}")
        print("associative: yes")
    return 0


def _green_json(S: Semigroup) -> dict:
    return {r.value: p.to_json(S) for r, p in green_partitions(S).items()}


def cmd_analyze(args) -> int:
    S = _load(args.file)
    report = classify(S)
    profs = profiles(S)
    if args.json:
        _emit({
            "order": S.order,
            "elements": list(S.names),
            "zero": None if S.zero is None else S.names[S.zero],
            "classifications": report.to_json(S),
            "interiorIdeals": [p.to_json(S) for p in profs],
            "green": _green_json(S),
        })
        return 0
    c = report.to_json(S)
    print(f"order: {S.order}  zero: {c['zero'] or 'none'}")
    for key in ("regular", "intraRegular", "duo", "interiorSimple", "chain", "zeroDegenerate"):
        print(f"{key}: {'yes' if c[key] else 'no'}")
    print("interior ideals:")
    flags = ("proper", "semiprime", "completelySemiprime", "prime", "stronglyPrime",
             "irreducible", "stronglyIrreducible", "minimal", "idempotent")
    for p in profs:
        d = p.to_json(S)
        on = [f for f in flags if d[f]]
        print(f"  {_fmt_set(S, p.elements)}: {' '.join(on) if on else '-'}")
    print("green:")
    for r, part in green_partitions(S).items():
        print(f"  {r.value}: " + " ".join(_fmt_set(S, C) for C in part.classes))
    return 0


def cmd_ideals(args) -> int:
    S = _load(args.file)
    kind = IdealKind(args.kind)
    fam = enumerate_ideals(S, kind)
    if args.json:
        _emit({"kind": kind.value, "ideals": [S.tokens(A) for A in fam]})
    else:
        for A in fam:
            print(_fmt_set(S, A))
    return 0


def cmd_green(args) -> int:
    S = _load(args.file)
    if args.json:
        _emit({"green": _green_json(S)})
    else:
        for r, part in green_partitions(S).items():
            print(f"{r.value}: " + " ".join(_fmt_set(S, C) for C in part.classes))
    return 0


def _corpus(args) -> tuple[list[Semigroup], str]:
    dedup = "up_to_iso" if args.up_to_iso else "labeled"
    if args.file:
        return [_load(args.file)], "labeled"
    if args.catalog:
        try:
            return parse_catalog(Path(args.catalog).read_text(encoding="utf-8")), "labeled"
        except OSError as exc:
            raise UsageError(f"{args.catalog}: {exc.strerror}") from None
        except SemigroupError as exc:
            raise UsageError(f"{args.catalog}: {exc}") from None
    if args.order is None:
        raise UsageError("verify needs FILE, --order N or --catalog FILE")
    try:
        cfg = EnumerationConfig(args.order, dedup, args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return list(enumerate_semigroups(cfg)), dedup


def cmd_verify(args) -> int:
    try:
        ids = resolve_ids(args.theorems)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    corpus, dedup = _corpus(args)
    report = run_suite(corpus, ids, dedup=dedup, jobs=args.jobs)
    if args.json:
        sys.stdout.write(report.dumps())
    else:
        print(f"corpus: {report.count} semigroup(s), order {report.order}, {report.to_json()['corpus']['dedup']}")
        width = max(len(t) for t in ids)
        for t in report.tallies:
            if t.fails == 0:
                mark = "ok"
            elif all(w["detail"]["erratum"] for w in t.witnesses):
                mark = "errata"
            else:
                mark = "FAIL"
            print(f"{t.id:<{width}}  holds {t.holds:>6}  fails {t.fails:>5}  skipped {t.skipped:>6}  {mark}")
        for e in report.to_json()["errata"]:
            if e["count"]:
                print(f"erratum {e['id']} ({e['theorem']}, {e['class']}): {e['count']}")
        if report.unexplained:
            print(f"unexplained failures: {len(report.unexplained)}")
    return 0 if report.clean else 2


def cmd_enumerate(args) -> int:
    try:
        cfg = EnumerationConfig(args.order, "up_to_iso" if args.up_to_iso else "labeled", args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    first = True
    for S in enumerate_semigroups(cfg):
        if args.json:
            sys.stdout.write(json.dumps([list(r) for r in S.table]) + "\n")
        else:
            if not first:
                sys.stdout.write("---\n")
            sys.stdout.write(serialize_semigroup(S))
        first = False
    return 0


def cmd_counterexample(args) -> int:
    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}")
    try:
        found = find_counterexample(args.theorem, args.max_order,
                                    "up_to_iso" if args.up_to_iso else "labeled")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if found is None:
        if args.json:
            _emit({"theorem": args.theorem, "maxOrder": args.max_order, "found": False,
                   "table": None, "detail": None, "erratum": None})
        else:
            print(f"{args.theorem}: no counterexample up to order {args.max_order}")
        return 0
    S, witness = found
    e = erratum_for(verify(S, args.theorem))
    if args.json:
        _emit({"theorem": args.theorem, "maxOrder": args.max_order, "found": True,
               "table": [list(r) for r in S.table], "detail": witness,
               "erratum": None if e is None else e.id})
    else:
        print(f"{args.theorem}: counterexample of order {S.order}")
        sys.stdout.write(serialize_semigroup(S))
        print("witness: " + json.dumps(witness, sort_keys=True))
        if e is not None:
            print(f"documented erratum: {e.id}")
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgideals", description="Interior ideals of finite semigroups.")
    parser.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a .sg file").add_argument("file")
    add("analyze", cmd_analyze, "classify and profile a semigroup").add_argument("file")
    p = add("ideals", cmd_ideals, "list ideals of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=[k.value for k in IdealKind])
    add("green", cmd_green, "Green's relations and the IN relation").add_argument("file")

    p = add("verify", cmd_verify, "check theorems on a file or a corpus")
    p.add_argument("file", nargs="?")
    p.add_argument("--order", type=int)
    p.add_argument("--catalog")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--theorems", default="all", help="comma-separated ids or 'all'")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p = add("enumerate", cmd_enumerate, "list all semigroups of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--limit", type=int)

    p = add("counterexample", cmd_counterexample, "search for the first failing semigroup")
    p.add_argument("--theorem", required=True)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    start = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 1
    if args.timing:
        print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
