"""Interior ideals of finite semigroups."""

from .core import (
    AssociativityError,
    AssociativityViolation,
    ElemSet,
    ParseError,
    PreconditionError,
    Semigroup,
    SemigroupError,
    ZeroError,
    check_associativity,
    detect_zero,
    is_subsemigroup,
    parse_semigroup,
    sandwich,
    serialize_semigroup,
    subset_product,
)
from .ideals import IdealKind, PrincipalKind, enumerate_ideals, is_ideal_of_kind, principal
from .green import Relation, green_partition, refines
from .harness import THEOREM_IDS, run_suite, verify

__version__ = "0.1.0"

__all__ = [
    "AssociativityError", "AssociativityViolation", "ElemSet", "ParseError", "PreconditionError",
    "Semigroup", "SemigroupError", "ZeroError", "check_associativity", "detect_zero",
    "is_subsemigroup", "parse_semigroup", "sandwich", "serialize_semigroup", "subset_product",
    "IdealKind", "PrincipalKind", "enumerate_ideals", "is_ideal_of_kind", "principal",
    "Relation", "green_partition", "refines", "THEOREM_IDS", "run_suite", "verify",
]
