"""
Versioned JSON schemas of the emitted reports.

Every report carries "schema": "torusfix/1" and the command that produced it.
"""

"""
Copyright (c) 2025 Firefly Software Solutions Inc.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at:

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from typing import Any, Dict, Mapping

import jsonschema

from ..errors import InvariantViolation

SCHEMA_VERSION = "torusfix/1"

COUNTS = {"type": "array", "items": {"type": "integer", "minimum": 0}}

SURVIVOR = {
    "type": "object",
    "properties": {
        "degree": {"type": "integer"},
        "side": {"enum": ["kernel", "cokernel"]},
        "class": {"type": "string"},
    },
    "required": ["degree", "side", "class"],
}

VERDICT = {
    "type": "object",
    "properties": {
        "condition": {"type": "string"},
        "location": {"type": "string"},
        "verdict": {"enum": ["verified-up-to", "fails", "inconclusive"]},
        "degree_bound": {"type": "integer"},
        "degree": {"type": "integer"},
        "defect": {"type": "integer", "minimum": 1},
        "survivors": {"type": "array", "items": SURVIVOR},
    },
    "required": ["condition", "location", "verdict", "degree_bound"],
}

WITNESS = {
    "type": "object",
    "properties": {
        "direction": {"type": "array", "items": {"type": "integer"}},
        "subtorus": {"type": "object"},
        "edges": COUNTS,
        "forest": {"type": "boolean"},
        "cycle": COUNTS,
    },
    "required": ["direction", "edges", "forest"],
}

FREENESS = {
    "type": "object",
    "properties": {
        "degree_bound": {"type": "integer"},
        "generator_degrees": COUNTS,
        "verdict": {"enum": ["free-up-to", "not-free"]},
        "certificate": {"type": "object", "properties": {"kind": {"enum": ["syzygy", "rank-excess"]}}},
    },
    "required": ["degree_bound", "generator_degrees", "verdict"],
}

STATUS = {"enum": ["pass", "fail", "inconclusive"]}

HYPOTHESIS_LIST = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "status": STATUS,
        "items": {"type": "object", "additionalProperties": STATUS},
    },
    "required": ["name", "status", "items"],
}


def _report(command: str, properties: Mapping[str, Any], required: list) -> Dict[str, Any]:
    return {
        "title": command,
        "type": "object",
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "command": {"const": command},
            **properties,
        },
        "required": ["schema", "command", *required],
    }


REPORT_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "graph-cohomology": _report(
        "graph-cohomology",
        {
            "degree_bound": {"type": "integer"},
            "hilbert": COUNTS,
            "generator_degrees": COUNTS,
            "freeness": FREENESS,
            "realizable": {"type": "boolean"},
            "witnesses": {"type": "array", "items": WITNESS},
        },
        ["degree_bound", "hilbert", "freeness", "realizable", "witnesses"],
    ),
    "graph-realizable": _report(
        "graph-realizable",
        {
            "realizable": {"type": "boolean"},
            "witnesses": {"type": "array", "items": WITNESS},
            "isotropy_crosscheck": {"type": "boolean"},
        },
        ["realizable", "witnesses"],
    ),
    "gkm-validate": _report(
        "gkm-validate",
        {"ok": {"type": "boolean"}, "vertex": {"type": "string"}, "edges": COUNTS},
        ["ok"],
    ),
    "circle-realizable": _report(
        "circle-realizable",
        {
            "verdict": {"enum": ["realizable", "not-realizable", "hypothesis-violated"]},
            "fixed_points": {"type": "integer"},
            "idempotents": {"type": "array", "items": {"type": "string"}},
            "reason": {"type": "string"},
            "witness": {"type": "string"},
            "hypotheses": {"type": "object"},
        },
        ["verdict", "hypotheses"],
    ),
    "system-check": _report(
        "system-check",
        {
            "degree_bound": {"type": "integer"},
            "nodes": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"node": {"type": "string"}, "pair": {"type": "string"}, "hilbert": COUNTS},
                    "required": ["node", "pair", "hilbert"],
                },
            },
            "surjectivity": {"type": "array", "items": VERDICT},
            "triviality": {"type": "array", "items": VERDICT},
            "localization": {"type": "array", "items": VERDICT},
            "localization_policy": {"type": "object"},
            "hypotheses": {
                "type": "object",
                "properties": {
                    "nodes": {"type": "array"},
                    "infinite_complex": HYPOTHESIS_LIST,
                    "finite_complex": HYPOTHESIS_LIST,
                },
                "required": ["nodes", "infinite_complex", "finite_complex"],
            },
        },
        ["degree_bound", "nodes", "surjectivity"],
    ),
    "criterion-check": _report(
        "criterion-check",
        {
            "degree_bound": {"type": "integer"},
            "conditions": {
                "type": "object",
                "properties": {"sum_closure": STATUS, "algebras": STATUS, "localization": STATUS},
                "required": ["sum_closure", "algebras", "localization"],
            },
            "sum_closure_failures": {"type": "array", "items": {"type": "string"}},
            "algebras": {"type": "array"},
            "cocycle_failures": {"type": "array", "items": {"type": "string"}},
            "localization": {"type": "array", "items": VERDICT},
            "localization_policy": {"type": "object"},
        },
        ["degree_bound", "conditions", "localization"],
    ),
    "fixtures": _report(
        "fixtures",
        {"written": {"type": "array", "items": {"type": "string"}}},
        ["written"],
    ),
}


def validate_report(report: Mapping[str, Any]) -> None:
    """Check an emitted report against its schema; a mismatch is an internal error."""
    command = report.get("command")
    if command not in REPORT_SCHEMAS:
        raise InvariantViolation(f"Report for unknown command {command!r}")
    try:
        jsonschema.validate(instance=dict(report), schema=REPORT_SCHEMAS[command])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InvariantViolation(f"{command} report does not match its schema at {where}: {exc.message}") from exc
