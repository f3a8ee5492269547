"""JSON Schemas for every ``--json`` output of the command line tool."""

_TOKENS = {"type": "array", "items": {"type": "string"}}
_SETS = {"type": "array", "items": _TOKENS}
_TABLE = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}
_NULLABLE_STR = {"type": ["string", "null"]}

VALIDATE = {
    "type": "object",
    "required": ["valid", "order", "elements", "zero", "associative", "violation"],
    "properties": {
        "valid": {"type": "boolean"},
        "order": {"type": ["integer", "null"]},
        "elements": {"type": ["array", "null"], "items": {"type": "string"}},
        "zero": _NULLABLE_STR,
        "associative": {"type": ["boolean", "null"]},
        "violation": {
            "type": ["object", "null"],
            "required": ["triple", "lhs", "rhs"],
            "properties": {
                "triple": {"type": "array", "items": {"type": "string"}, "minItems": 3, "maxItems": 3},
                "lhs": {"type": "string"},
                "rhs": {"type": "string"},
            },
        },
        "error": {"type": "string"},
    },
    "additionalProperties": False,
}

IDEALS = {
    "type": "object",
    "required": ["kind", "ideals"],
    "properties": {"kind": {"type": "string"}, "ideals": _SETS},
    "additionalProperties": False,
}

GREEN = {
    "type": "object",
    "required": ["green"],
    "properties": {
        "green": {
            "type": "object",
            "required": ["L", "R", "J", "H", "I"],
            "properties": {k: _SETS for k in "LRJHI"},
            "additionalProperties": False,
        }
    },
    "additionalProperties": False,
}

_PROFILE = {
    "type": "object",
    "required": ["elements", "proper", "semiprime", "completelySemiprime", "prime", "stronglyPrime",
                 "irreducible", "stronglyIrreducible", "minimal", "idempotent"],
    "properties": {"elements": _TOKENS},
    "additionalProperties": {"type": "boolean"},
}

ANALYZE = {
    "type": "object",
    "required": ["order", "elements", "zero", "classifications", "interiorIdeals", "green"],
    "properties": {
        "order": {"type": "integer"},
        "elements": _TOKENS,
        "zero": _NULLABLE_STR,
        "classifications": {
            "type": "object",
            "required": ["regular", "intraRegular", "duo", "interiorSimple", "chain", "zeroDegenerate"],
        },
        "interiorIdeals": {"type": "array", "items": _PROFILE},
        "green": GREEN["properties"]["green"],
    },
    "additionalProperties": False,
}

_WITNESS = {
    "type": "object",
    "required": ["table", "detail"],
    "properties": {"table": _TABLE, "detail": {"type": "object"}},
    "additionalProperties": False,
}

SUITE_REPORT = {
    "type": "object",
    "required": ["schema", "corpus", "theorems", "errata"],
    "properties": {
        "schema": {"const": 1},
        "corpus": {
            "type": "object",
            "required": ["order", "count", "dedup"],
            "properties": {
                "order": {"type": ["integer", "null"]},
                "count": {"type": "integer", "minimum": 0},
                "dedup": {"enum": ["labeled", "iso"]},
            },
            "additionalProperties": False,
        },
        "theorems": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "holds", "fails", "skipped", "witnesses"],
                "properties": {
                    "id": {"type": "string"},
                    "holds": {"type": "integer", "minimum": 0},
                    "fails": {"type": "integer", "minimum": 0},
                    "skipped": {"type": "integer", "minimum": 0},
                    "witnesses": {"type": "array", "items": _WITNESS},
                },
                "additionalProperties": False,
            },
        },
        "errata": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "version", "theorem", "class", "count", "justification"],
            },
        },
    },
    "additionalProperties": False,
}

ENUMERATE_LINE = _TABLE

COUNTEREXAMPLE = {
    "type": "object",
    "required": ["theorem", "maxOrder", "found", "table", "detail"],
    "properties": {
        "theorem": {"type": "string"},
        "maxOrder": {"type": "integer"},
        "found": {"type": "boolean"},
        "table": {"oneOf": [_TABLE, {"type": "null"}]},
        "detail": {"type": ["object", "null"]},
        "erratum": _NULLABLE_STR,
    },
    "additionalProperties": False,
}
