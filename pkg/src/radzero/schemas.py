"""JSON Schemas (draft 2020-12) for the ``--json`` output of every command."""

from __future__ import annotations

from copy import deepcopy

# counts may exceed 2**53 and are then written as decimal strings
BIGINT = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]}
NAT = {"type": "integer", "minimum": 0}
STRINGS = {"type": "array", "items": {"type": "string"}}

QUIVER = {
    "type": "object",
    "required": ["name", "vertices", "weights", "arrows"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "vertices": STRINGS,
        "weights": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        "arrows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["source", "target", "a", "b"],
                "additionalProperties": False,
                "properties": {
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                    "a": {"type": "integer", "minimum": 1},
                    "b": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}

HOM_RESULT = {
    "status": {"enum": ["finite", "zero", "unbounded", "horizon"]},
    "value": {"anyOf": [BIGINT, {"type": "null"}]},
    "certified": {"type": "boolean"},
    "level_dims": {"type": "array", "items": BIGINT},
    "stabilized_at": {"anyOf": [NAT, {"type": "null"}]},
    "reason": {"type": "string"},
}

QUIVER_OUT = {"quiver": QUIVER, "text": {"type": "string"}}

_BODIES: dict[str, dict] = {
    "validate": {
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["file", "ok"],
                "properties": {
                    "file": {"type": "string"},
                    "ok": {"type": "boolean"},
                    "name": {"type": "string"},
                    "vertices": NAT,
                    "arrows": NAT,
                    "error": {"type": "string"},
                    "line": {"type": ["integer", "null"]},
                    "col": {"type": ["integer", "null"]},
                },
            },
        }
    },
    "info": {
        "quiver": QUIVER,
        "a_matrix": {"type": "array", "items": {"type": "array", "items": NAT}},
        "b_matrix": {"type": "array", "items": {"type": "array", "items": NAT}},
        "classification": {
            "type": "object",
            "required": ["sources", "sinks", "cyclic", "cyclic_like", "reaches_cycle", "reached_by_cycle", "scc"],
            "properties": {
                **{k: STRINGS for k in ("sources", "sinks", "cyclic", "cyclic_like", "reaches_cycle", "reached_by_cycle")},
                "scc": {"type": "array", "items": STRINGS},
            },
        },
    },
    "cyclicize": {
        "core": QUIVER,
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["vertex", "kind"],
                "properties": {"vertex": {"type": "string"}, "kind": {"enum": ["source", "sink"]}},
            },
        },
        "simple": {"type": "boolean"},
    },
    "hom-finite": {
        "hom_finite": {"type": "boolean"},
        "explanation": {"type": "string"},
        "offending": {"anyOf": [{"type": "null"}, {"type": "string"}, STRINGS]},
    },
    "bratteli": {
        "depth": {"type": "integer", "minimum": 1},
        "vertices": STRINGS,
        "weights": {"type": "object", "additionalProperties": {"type": "integer"}},
        "levels": {"type": "array", "items": {"type": "object", "additionalProperties": BIGINT}},
        "sizes": {"type": "object", "additionalProperties": {"type": "array", "items": BIGINT}},
        "level_dims": {"type": "array", "items": BIGINT},
        "injective": {"type": "array", "items": {"type": "boolean"}},
        "edges": {"type": "array", "items": {"type": "array", "prefixItems": [{"type": "string"}, {"type": "string"}, NAT]}},
    },
    "hom-dim": {"from": {"type": "string"}, "to": {"type": "string"}, "shift": {"type": "integer"}, **HOM_RESULT},
    "k-dim": {"shift": {"type": "integer"}, **HOM_RESULT},
    "sigma": {
        "blocks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["vertex", "size", "weight"],
                "properties": {"vertex": {"type": "string"}, "size": BIGINT, "weight": {"type": "integer"}},
            },
        },
        "sigma_perm": {"type": "object", "additionalProperties": {"type": "string"}},
        "order": {"type": "integer", "minimum": 1},
        "conjugacy_class": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "dimension": BIGINT,
    },
    "verify-theorem-a": {
        "range": {"type": "array", "items": {"type": "integer"}},
        "passed": {"type": "boolean"},
        "bijective": {"type": "boolean"},
        "composition": {"type": "boolean"},
        "matches_power": {"type": "boolean"},
        "kdim": {"type": "object", "additionalProperties": BIGINT},
        "pairing": {"type": "object", "additionalProperties": BIGINT},
        "kdim_matches_pairing": {"type": "boolean"},
        "kdim_constant": {"type": "boolean"},
        "failures": STRINGS,
    },
    "adjoin-source": QUIVER_OUT,
    "adjoin-sink": QUIVER_OUT,
    "trivial-ext": QUIVER_OUT,
    "union": QUIVER_OUT,
    "gen": QUIVER_OUT,
    "verify": {
        "prime": {"type": "integer"},
        "depth": NAT,
        "passed": {"type": "boolean"},
        "inconclusive": NAT,
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "subject", "expected", "actual", "ok"],
                "properties": {
                    "check": {"enum": ["syzygy", "radical-square-zero", "stable-hom", "colimit"]},
                    "subject": {"type": "string"},
                    "expected": {"type": ["integer", "null"]},
                    "actual": {"type": ["integer", "null"]},
                    "ok": {"type": ["boolean", "null"]},
                },
            },
        },
    },
    "export": {"format": {"const": "dot"}, "text": {"type": "string"}},
}

COMMANDS = tuple(_BODIES)

ERROR = {
    "type": "object",
    "required": ["kind", "message"],
    "properties": {
        "kind": {"enum": ["input", "refused"]},
        "message": {"type": "string"},
        "line": {"type": ["integer", "null"]},
        "col": {"type": ["integer", "null"]},
    },
}


def schema_for(command: str) -> dict:
    """Schema of ``radzero <command> --json``: the success body or an error envelope."""
    if command not in _BODIES:
        raise ValueError(f"no schema for {command!r}; known: {', '.join(COMMANDS)}")
    header = {"schema": {"const": "radzero/1"}, "command": {"const": command}}
    body = deepcopy(_BODIES[command])
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": f"radzero/1/{command}",
        "oneOf": [
            {
                "type": "object",
                "required": ["schema", "command", *body],
                "additionalProperties": False,
                "properties": {**header, **body},
            },
            {
                "type": "object",
                "required": ["schema", "command", "error"],
                "additionalProperties": False,
                "properties": {**header, "error": ERROR},
            },
        ],
    }
