"""Cayley tables, element subsets, and the complex product.

Conventions: elements are indices ``0..n-1``; ``table[i][j]`` is the product
``names[i] * names[j]`` (the left operand selects the row).  Subsets are
bit-vectors stored in a Python ``int``.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence


class SemigroupError(ValueError):
    """Raised when a table does not describe a semigroup."""


class ParseError(SemigroupError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class AssociativityError(SemigroupError):
    def __init__(self, violation: "AssociativityViolation", names: Sequence[str]):
        i, j, k = (names[x] for x in (violation.i, violation.j, violation.k))
        super().__init__(
            f"not associative at ({i},{j},{k}): "
            f"({i}{j}){k} = {names[violation.lhs]} but {i}({j}{k}) = {names[violation.rhs]}"
        )
        self.violation = violation
        self.names = tuple(names)


class ZeroError(SemigroupError):
    """Declared zero element is not two-sided absorbing."""


class PreconditionError(ValueError):
    """An operation was called outside its domain.

    ``reason`` is a short machine-readable code such as ``"empty"`` or
    ``"not-interior"``.
    """

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"e{i}" for i in range(n))


@dataclass(frozen=True)
class ElemSet:
    """A subset of ``{0, .., n-1}`` as a bit-vector."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#b} out of range for order {self.n}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "ElemSet":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"element index {i} out of range for order {n}")
            bits |= 1 << i
        return cls(bits, n)

    @classmethod
    def full(cls, n: int) -> "ElemSet":
        return cls((1 << n) - 1, n)

    @classmethod
    def empty(cls, n: int) -> "ElemSet":
        return cls(0, n)

    def __iter__(self) -> Iterator[int]:
        return iter(bit_indices(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.bits >> i & 1)

    def _check(self, other: "ElemSet"):
        if not isinstance(other, ElemSet):
            raise TypeError(f"expected ElemSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"width mismatch: {self.n} vs {other.n}")

    def __and__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.bits & other.bits, self.n)

    def __or__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.bits | other.bits, self.n)

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.bits & ~other.bits, self.n)

    def __le__(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "ElemSet") -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: "ElemSet") -> bool:
        return other <= self

    def __gt__(self, other: "ElemSet") -> bool:
        return other < self

    def isdisjoint(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def indices(self) -> list[int]:
        return bit_indices(self.bits)

    def __repr__(self) -> str:
        return f"ElemSet({self.indices()}, n={self.n})"


def bit_indices(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class AssociativityViolation:
    i: int
    j: int
    k: int
    lhs: int  # (i j) k
    rhs: int  # i (j k)


@dataclass(frozen=True)
class Semigroup:
    """A finite semigroup given by its Cayley table.

    Build one with :meth:`from_table` or :func:`parse_semigroup`, which
    check associativity.  Calling the constructor directly only checks the
    shape of the table; enumeration code that already knows the table is
    associative uses it to skip the cubic scan.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = None
    zero: Optional[int] = None

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        n = len(table)
        if n == 0:
            raise SemigroupError("a semigroup needs at least one element")
        for row in table:
            if len(row) != n:
                raise SemigroupError(f"table is not square ({n} rows, a row of length {len(row)})")
            for v in row:
                if not 0 <= v < n:
                    raise SemigroupError(f"table entry {v} out of range for order {n}")
        object.__setattr__(self, "table", table)
        names = default_names(n) if self.names is None else tuple(self.names)
        if len(names) != n or len(set(names)) != n:
            raise SemigroupError("element names must be n distinct tokens")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_table(cls, table, names=None, zero: Optional[int] = None) -> "Semigroup":
        """Validated constructor; ``zero`` is detected when not given."""
        S = cls(table, names)
        violations = check_associativity(S.table, first_only=True)
        if violations:
            raise AssociativityError(violations[0], S.names)
        detected = detect_zero(S)
        if zero is not None and zero != detected:
            raise ZeroError(f"declared zero {S.names[zero]} is not absorbing")
        return cls(S.table, S.names, detected)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def full(self) -> ElemSet:
        return ElemSet.full(self.order)

    @property
    def empty(self) -> ElemSet:
        return ElemSet.empty(self.order)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, token: str) -> int:
        try:
            return self.names.index(token)
        except ValueError:
            raise KeyError(f"unknown element {token!r}") from None

    def subset(self, *tokens: str) -> ElemSet:
        """``S.subset("a", "b")`` builds the ElemSet {a, b}."""
        return ElemSet.of(self.order, (self.index(t) for t in tokens))

    def elems(self, indices: Iterable[int]) -> ElemSet:
        return ElemSet.of(self.order, indices)

    def tokens(self, A: ElemSet) -> list[str]:
        return [self.names[i] for i in A]


def check_associativity(table, first_only: bool = False) -> list[AssociativityViolation]:
    """All triples where ``(ij)k != i(jk)``, in lexicographic order."""
    n = len(table)
    out = []
    for i, j, k in product(range(n), repeat=3):
        lhs = table[table[i][j]][k]
        rhs = table[i][table[j][k]]
        if lhs != rhs:
            out.append(AssociativityViolation(i, j, k, lhs, rhs))
            if first_only:
                break
    return out


def detect_zero(S: Semigroup) -> Optional[int]:
    t = S.table
    rn = range(S.order)
    for z in rn:
        if all(t[z][x] == z and t[x][z] == z for x in rn):
            return z
    return None


def _check_width(S: Semigroup, *sets: ElemSet):
    for A in sets:
        if A.n != S.order:
            raise ValueError(f"subset of width {A.n} used with a semigroup of order {S.order}")


def subset_product(S: Semigroup, A: ElemSet, B: ElemSet) -> ElemSet:
    """The complex product ``{ab : a in A, b in B}``."""
    _check_width(S, A, B)
    t = S.table
    bs = B.indices()
    bits = 0
    for a in A:
        row = t[a]
        for b in bs:
            bits |= 1 << row[b]
    return ElemSet(bits, S.order)


def product_of(S: Semigroup, *factors: ElemSet) -> ElemSet:
    """Left-to-right complex product of several subsets."""
    out = factors[0]
    for F in factors[1:]:
        out = subset_product(S, out, F)
    return out


def sandwich(S: Semigroup, A: ElemSet) -> ElemSet:
    """``S A S``."""
    if not A:
        raise PreconditionError("sandwich of the empty set", "empty")
    return product_of(S, S.full, A, S.full)


def is_subsemigroup(S: Semigroup, A: ElemSet) -> bool:
    if not A:
        raise PreconditionError("subsemigroups are non-empty", "empty")
    return subset_product(S, A, A) <= A


def induced(S: Semigroup, T: ElemSet) -> tuple[Semigroup, list[int]]:
    """The subsemigroup ``T`` as a semigroup in its own right.

    Returns the induced semigroup and the list mapping its indices back to
    indices of ``S``.
    """
    if not is_subsemigroup(S, T):
        raise PreconditionError("subset is not closed under multiplication", "not-subsemigroup")
    members = T.indices()
    pos = {x: i for i, x in enumerate(members)}
    table = [[pos[S.table[x][y]] for y in members] for x in members]
    sub = Semigroup(table, [S.names[x] for x in members])
    return Semigroup(sub.table, sub.names, detect_zero(sub)), members


def relabel(S: Semigroup, perm: Sequence[int], names=None) -> Semigroup:
    """Isomorphic copy where element ``i`` becomes ``perm[i]``."""
    n = S.order
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[perm[i]][perm[j]] = perm[S.table[i][j]]
    if names is None:
        names = [None] * n
        for i in range(n):
            names[perm[i]] = S.names[i]
    zero = None if S.zero is None else perm[S.zero]
    return Semigroup(table, names, zero)


# .sg text format

_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[int, str]]:
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]


def parse_semigroup(text: str, first_line: int = 1) -> Semigroup:
    """Parse one ``.sg`` document.

    ``first_line`` offsets reported line numbers, for documents cut out of a
    catalog.
    """
    names = None
    zero_tok = None
    rows = []
    in_table = False
    last = first_line
    for lineno, line in enumerate(text.splitlines(), start=first_line):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        last = lineno
        if in_table:
            if len(rows) == len(names):
                raise ParseError("unexpected content after the table", lineno)
            rows.append((lineno, _tokens(line)))
            continue
        key, sep, rest = stripped.partition(":")
        col = line.index(stripped) + 1
        if not sep:
            raise ParseError(f"expected 'key: value', got {stripped!r}", lineno, col)
        key = key.strip()
        if key == "elements":
            if names is not None:
                raise ParseError("duplicate 'elements:' line", lineno, col)
            names = rest.split()
            if not names:
                raise ParseError("'elements:' needs at least one token", lineno, col)
            offset = line.index(":") + 1
            seen = set()
            for c, tok in _tokens(line[offset:]):
                if tok in seen:
                    raise ParseError(f"duplicate element {tok!r}", lineno, c + offset)
                seen.add(tok)
        elif key == "zero":
            toks = rest.split()
            if len(toks) != 1:
                raise ParseError("'zero:' takes exactly one token", lineno, col)
            zero_tok = (lineno, toks[0])
        elif key == "table":
            if names is None:
                raise ParseError("'table:' before 'elements:'", lineno, col)
            if rest.strip():
                raise ParseError("table rows start on the line after 'table:'", lineno, col)
            in_table = True
        else:
            raise ParseError(f"unknown key {key!r}", lineno, col)
    if names is None:
        raise ParseError("missing 'elements:' line", last)
    if not in_table:
        raise ParseError("missing 'table:' section", last)
    n = len(names)
    if len(rows) != n:
        raise ParseError(f"table has {len(rows)} rows, expected {n} (table is not square)", last)
    index = {tok: i for i, tok in enumerate(names)}
    table = []
    for lineno, toks in rows:
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n} (table is not square)", lineno)
        row = []
        for col, tok in toks:
            if tok not in index:
                raise ParseError(f"unknown element {tok!r} in table", lineno, col)
            row.append(index[tok])
        table.append(row)
    zero = None
    if zero_tok is not None:
        lineno, tok = zero_tok
        if tok not in index:
            raise ParseError(f"unknown zero element {tok!r}", lineno)
        zero = index[tok]
    return Semigroup.from_table(table, names, zero)


def serialize_semigroup(S: Semigroup) -> str:
    lines = ["elements: " + " ".join(S.names)]
    if S.zero is not None:
        lines.append("zero: " + S.names[S.zero])
    lines.append("table:")
    for row in S.table:
        lines.append(" ".join(S.names[v] for v in row))
    return "\n".join(lines) + "\n"
