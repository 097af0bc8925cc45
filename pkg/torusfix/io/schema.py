"""
JSON schemas of the input files.

Each schema is a plain dict checked with jsonschema; YAML inputs are validated after
loading with the same schemas.
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

from typing import Any, Dict

# integers, or strings such as "-3" and "9/4"
RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[-+]?\d+(\s*/\s*[1-9]\d*)?\s*$"},
    ]
}

INT_VECTOR = {"type": "array", "items": {"type": "integer"}}

RATIONAL_VECTOR = {"type": "array", "items": RATIONAL}

NAME = {"type": "string", "minLength": 1}

SUBGROUP = {
    "description": "Annihilator lattice rows, or the shorthands T and trivial",
    "oneOf": [
        {"type": "string", "enum": ["T", "trivial"]},
        {
            "type": "object",
            "properties": {
                "ann": {"type": "array", "items": INT_VECTOR},
                "n": {"type": "integer", "minimum": 1},
            },
            "required": ["ann"],
            "additionalProperties": False,
        },
    ],
}

GRAPH: Dict[str, Any] = {
    "title": "graph",
    "description": "A T-graph: vertices and edges labelled by characters",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "vertices": {"type": "array", "items": NAME},
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"u": NAME, "v": NAME, "label": INT_VECTOR},
                "required": ["u", "v", "label"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["n", "vertices", "edges"],
}

ALGEBRA: Dict[str, Any] = {
    "title": "circle algebra",
    "description": "A graded Q[x]-algebra in PID normal form",
    "type": "object",
    "properties": {
        "free": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"name": NAME, "deg": {"type": "integer", "minimum": 0}},
                "required": ["name", "deg"],
                "additionalProperties": False,
            },
        },
        "torsion": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": NAME,
                    "deg": {"type": "integer", "minimum": 0},
                    "order": {"type": "integer", "minimum": 1},
                },
                "required": ["name", "deg", "order"],
                "additionalProperties": False,
            },
        },
        "unit": {
            "oneOf": [NAME, {"type": "object", "additionalProperties": RATIONAL}],
        },
        "mult": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "l": NAME,
                    "r": NAME,
                    "terms": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {
                                "g": NAME,
                                "coef": RATIONAL,
                                "xpow": {"type": "integer", "minimum": 0},
                            },
                            "required": ["g", "coef", "xpow"],
                            "additionalProperties": False,
                        },
                    },
                },
                "required": ["l", "r", "terms"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["free"],
}

EXPRESSION = {"type": "string"}

FACTOR = {
    "type": "object",
    "properties": {
        "gens": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"name": NAME, "deg": {"type": "integer", "minimum": 1}},
                "required": ["name", "deg"],
                "additionalProperties": False,
            },
        },
        "d": {"type": "object", "additionalProperties": EXPRESSION},
    },
    "required": ["gens"],
    "additionalProperties": False,
}

SYSTEM: Dict[str, Any] = {
    "title": "system",
    "description": "A diagram of cochain algebras over a poset of pairs (U, H)",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "poset": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"name": NAME, "U": SUBGROUP, "H": SUBGROUP},
                "required": ["name", "U", "H"],
                "additionalProperties": False,
            },
        },
        "d_right": {"type": "array", "items": SUBGROUP},
        "d_left": {"type": "array", "items": SUBGROUP},
        "tori": {"type": "array", "items": SUBGROUP},
        "algebras": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "properties": {"factors": {"type": "array", "items": FACTOR}},
                "required": ["factors"],
                "additionalProperties": False,
            },
        },
        "maps": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "source": NAME,
                    "target": NAME,
                    "factors": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {
                                "from": {"type": "integer", "minimum": 0},
                                "images": {"type": "object", "additionalProperties": EXPRESSION},
                            },
                            "required": ["from"],
                            "additionalProperties": False,
                        },
                    },
                },
                "required": ["source", "target", "factors"],
                "additionalProperties": False,
            },
        },
        "rstructure": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {"oneOf": [EXPRESSION, {"type": "array", "items": EXPRESSION}]},
            },
        },
    },
    "required": ["n", "poset", "algebras", "maps"],
}

ELEMENT = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "gen": NAME,
            "coef": RATIONAL,
            "exp": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "required": ["gen", "coef"],
        "additionalProperties": False,
    },
}

CRITERION: Dict[str, Any] = {
    "title": "criterion",
    "description": "Subspaces of Q^n with graded algebras over their polynomial rings and maps",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "subspaces": {"type": "array", "items": {"type": "array", "items": RATIONAL_VECTOR}, "minItems": 1},
        "algebras": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "generators": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {"name": NAME, "deg": {"type": "integer", "minimum": 0}},
                            "required": ["name", "deg"],
                            "additionalProperties": False,
                        },
                    },
                    "relations": {"type": "array", "items": ELEMENT},
                    "products": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {"l": NAME, "r": NAME, "value": ELEMENT},
                            "required": ["l", "r", "value"],
                            "additionalProperties": False,
                        },
                    },
                    "unit": ELEMENT,
                },
                "required": ["generators"],
                "additionalProperties": False,
            },
        },
        "maps": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "source": {"type": "integer", "minimum": 0},
                    "target": {"type": "integer", "minimum": 0},
                    "images": {"type": "object", "additionalProperties": ELEMENT},
                },
                "required": ["source", "target", "images"],
                "additionalProperties": False,
            },
        },
        "tests": {"type": "array", "items": {"type": "array", "items": RATIONAL_VECTOR}},
    },
    "required": ["n", "subspaces", "algebras", "maps"],
}

INPUT_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "graph": GRAPH,
    "algebra": ALGEBRA,
    "system": SYSTEM,
    "criterion": CRITERION,
}
