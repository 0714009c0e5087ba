"""JSON schemas for the machine-readable output of every ``peo`` command."""
from __future__ import annotations

import jsonschema

INTEGER = {"type": "string", "pattern": "^-?[0-9]+$"}
RATIONAL = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
FAMILY = {"enum": ["subset", "prime_subset", "superset", "prime_superset"]}

COUNT = {
    "type": "object",
    "required": ["command", "kind", "n", "values"],
    "properties": {
        "command": {"const": "count"},
        "kind": {"enum": ["exact", "family"]},
        "method": {"enum": ["standard", "prime"]},
        "family": FAMILY,
        "k": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 0},
        "values": {"type": "array", "items": INTEGER},
        "golden_mismatches": {"type": "array", "items": {"type": "integer"}},
        "completed_through": {"type": "integer"},
    },
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "required": ["command", "results"],
    "properties": {
        "command": {"const": "verify"},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["equation", "series", "order", "holds", "status"],
                "properties": {
                    "equation": {"type": "string"},
                    "label": {"type": "string"},
                    "series": {"type": "string"},
                    "order": {"type": "integer"},
                    "holds": {"type": "boolean"},
                    "first_failure": {"type": ["integer", "null"]},
                    "status": {"type": "string"},
                },
            },
        },
    },
}

_ROOT = {
    "type": "object",
    "required": ["polynomial", "roots", "candidates"],
    "properties": {
        "polynomial": {"type": "string"},
        "label": {"type": "string"},
        "roots": {"type": "array", "items": {
            "type": "object",
            "required": ["lo", "hi", "approx"],
            "properties": {"lo": RATIONAL, "hi": RATIONAL, "approx": {"type": "number"}},
        }},
        "candidates": {"type": "array", "items": {"type": "number"}},
        "growth": {"type": ["number", "null"]},
    },
}

_SEQUENCE_BOUND = {
    "type": "object",
    "required": ["name", "n", "fekete", "estimate"],
    "properties": {
        "name": {"type": "string"},
        "n": {"type": "integer"},
        "fekete": {"type": "object", "required": ["value", "certified_lower", "supermultiplicative"]},
        "estimate": {"type": "object", "required": ["estimate", "rigorous"],
                     "properties": {"rigorous": {"const": False}}},
    },
}

BOUNDS = {
    "type": "object",
    "required": ["command", "roots", "sequences"],
    "properties": {
        "command": {"const": "bounds"},
        "roots": {"type": "array", "items": _ROOT},
        "sequences": {"type": "array", "items": _SEQUENCE_BOUND},
    },
}

ORACLE = {
    "type": "object",
    "required": ["command", "n", "kmax", "checks", "passed"],
    "properties": {
        "command": {"const": "oracle"},
        "n": {"type": "integer"},
        "kmax": {"type": "integer"},
        "passed": {"type": "boolean"},
        "checks": {"type": "array", "items": {
            "type": "object",
            "required": ["name", "passed"],
            "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"},
                           "detail": {"type": "string"}},
        }},
    },
}

TABLE1 = {
    "type": "object",
    "required": ["command", "n", "kmax", "rows", "diffs"],
    "properties": {
        "command": {"const": "table1"},
        "n": {"type": "integer"},
        "kmax": {"type": "integer"},
        "rows": {"type": "array", "items": {
            "type": "object",
            "required": ["name", "counts", "equals_o_n"],
            "properties": {"counts": {"type": "array", "items": INTEGER}},
        }},
        "diffs": {"type": "array", "items": {
            "type": "object",
            "required": ["row", "n", "expected", "got"],
            "properties": {"expected": INTEGER, "got": INTEGER},
        }},
    },
}

SCHEMAS = {
    "count": COUNT,
    "verify": VERIFY,
    "bounds": BOUNDS,
    "oracle": ORACLE,
    "table1": TABLE1,
}


def validate(command: str, obj) -> None:
    """Raise ``jsonschema.ValidationError`` if obj does not match the schema."""
    jsonschema.validate(obj, SCHEMAS[command])
