"""Exhaustive generation of small semigroups.

Tables are filled cell by cell in row-major order with values tried in
ascending order, so the labeled stream comes out in lexicographic table
order.  Every time a cell is set, each associativity triple that the cell
completes is checked; a triple is checked exactly once, when the last of its
four lookups becomes defined.

In ``up_to_iso`` mode a partial table is abandoned as soon as some
relabeling of its defined part is lexicographically smaller, so only
canonical representatives (see :func:`canonical_form`) are emitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional

from .core import Semigroup, default_names, detect_zero, parse_semigroup, serialize_semigroup

MAX_ORDER = 6
DEDUP_MODES = ("labeled", "up_to_iso")


@dataclass(frozen=True)
class EnumerationConfig:
    order: int
    dedup: str = "labeled"
    limit: Optional[int] = None
    seed_filter: Optional[Callable[[Semigroup], bool]] = None

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {self.order}")
        if self.dedup not in DEDUP_MODES:
            raise ValueError(f"dedup must be one of {DEDUP_MODES}, got {self.dedup!r}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be non-negative")


def _completes_triples(t: list[int], n: int, i: int, j: int) -> bool:
    """Check every triple in which cell (i, j) is one of the four lookups."""
    U = -1
    v = t[i * n + j]
    # (x, y) = (i, j)
    for z in range(n):
        lhs = t[v * n + z]
        yz = t[j * n + z]
        if lhs == U or yz == U:
            continue
        rhs = t[i * n + yz]
        if rhs != U and lhs != rhs:
            return False
    # (y, z) = (i, j)
    for x in range(n):
        xy = t[x * n + i]
        rhs = t[x * n + v]
        if xy == U or rhs == U:
            continue
        lhs = t[xy * n + j]
        if lhs != U and lhs != rhs:
            return False
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            # (xy, z) = (i, j): lhs is v
            if xy == i:
                yz = t[y * n + j]
                if yz != U:
                    rhs = t[x * n + yz]
                    if rhs != U and rhs != v:
                        return False
            # (x, yz) = (i, j) with x = i: rhs is v; here (x, y) plays (y, z)
            if xy == j:
                iy = t[i * n + x]
                if iy != U:
                    lhs = t[iy * n + y]
                    if lhs != U and lhs != v:
                        return False
    return True


def _has_smaller_relabeling(t: list[int], n: int, filled: int, perms, invs) -> bool:
    for p, q in zip(perms, invs):
        for k in range(filled):
            a, b = divmod(k, n)
            src = t[q[a] * n + q[b]]
            if src == -1:
                break
            r = p[src]
            if r < t[k]:
                return True
            if r > t[k]:
                break
    return False


def _search(n: int, iso: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = n * n
    t = [-1] * cells
    perms = invs = ()
    if iso:
        perms = [p for p in permutations(range(n)) if list(p) != list(range(n))]
        invs = [tuple(sorted(range(n), key=lambda i: p[i])) for p in perms]

    def rec(c):
        if c == cells:
            yield tuple(tuple(t[r * n:(r + 1) * n]) for r in range(n))
            return
        i, j = divmod(c, n)
        for v in range(n):
            t[c] = v
            if not _completes_triples(t, n, i, j):
                continue
            if iso and _has_smaller_relabeling(t, n, c + 1, perms, invs):
                continue
            yield from rec(c + 1)
        t[c] = -1

    yield from rec(0)


def enumerate_semigroups(cfg: EnumerationConfig) -> Iterator[Semigroup]:
    names = default_names(cfg.order)
    count = 0
    for table in _search(cfg.order, cfg.dedup == "up_to_iso"):
        if cfg.limit is not None and count >= cfg.limit:
            return
        S = Semigroup(table, names)
        S = Semigroup(S.table, names, detect_zero(S))
        if cfg.seed_filter is not None and not cfg.seed_filter(S):
            continue
        count += 1
        yield S


def all_semigroups(order: int, up_to_iso: bool = False) -> list[Semigroup]:
    return list(enumerate_semigroups(EnumerationConfig(order, "up_to_iso" if up_to_iso else "labeled")))


def _relabeled_flat(table, perm) -> tuple[int, ...]:
    n = len(table)
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            out[perm[i] * n + perm[j]] = perm[table[i][j]]
    return tuple(out)


def canonical_form(S: Semigroup) -> Semigroup:
    """Lexicographically least relabeled table, with default element names."""
    n = S.order
    best = min(_relabeled_flat(S.table, p) for p in permutations(range(n)))
    C = Semigroup([best[r * n:(r + 1) * n] for r in range(n)], default_names(n))
    return Semigroup(C.table, C.names, detect_zero(C))


# catalogs

def parse_catalog(text: str) -> list[Semigroup]:
    """Parse ``---``-separated ``.sg`` documents."""
    out = []
    chunk: list[str] = []
    start = 1
    for lineno, line in enumerate(text.splitlines() + ["---"], start=1):
        if line.strip() == "---":
            if any(s.strip() and not s.strip().startswith("#") for s in chunk):
                out.append(parse_semigroup("\n".join(chunk), first_line=start))
            chunk = []
            start = lineno + 1
        else:
            chunk.append(line)
    return out


def dump_catalog(semigroups: Iterable[Semigroup]) -> str:
    return "---\n".join(serialize_semigroup(S) for S in semigroups)


def to_jsonl(semigroups: Iterable[Semigroup]) -> str:
    return "".join(json.dumps([list(r) for r in S.table]) + "\n" for S in semigroups)


def from_jsonl(text: str) -> list[Semigroup]:
    return [Semigroup.from_table(json.loads(line)) for line in text.splitlines() if line.strip()]
