"""
Bundled input files.

Each builder returns {file name: document}; write_fixture serialises the documents
deterministically so repeated runs produce identical bytes.
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

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Union

from .circle.algebra import mk_Ac
from .core.linalg import format_fraction
from .errors import InputError
from .system.criterion import criterion_data_for_circle_algebra

logger = logging.getLogger(__name__)

Documents = Dict[str, Dict[str, Any]]

AC_FAMILY = (Fraction(0), Fraction(1), Fraction(2), Fraction(4), Fraction(-1), Fraction(9, 4))
AC_CRITERION = (Fraction(1), Fraction(2))

# isotropy subgroups of the S^6 example, as annihilator rows on T^2
_S6_SUBGROUPS = {
    "H1": {"ann": [[0, 1]]},
    "H2": {"ann": [[1, -1]]},
    "H3": {"ann": [[1, 0]]},
}
_S6_WEIGHTS = [[0, 1], [1, -1], [1, 0]]


def _c_suffix(c: Fraction) -> str:
    return format_fraction(c).replace("-", "m").replace("/", "_")


def s6_graph() -> Documents:
    """Two fixed points joined by the three isotropy spheres."""
    return {
        "s6_graph.json": {
            "n": 2,
            "vertices": ["N", "S"],
            "edges": [{"u": "N", "v": "S", "label": list(w)} for w in _S6_WEIGHTS],
        }
    }


def _node(name: str, U: Any, H: Any) -> Dict[str, Any]:
    return {"name": name, "U": U, "H": H}


def _gens(*pairs: Any) -> List[Dict[str, Any]]:
    return [{"name": name, "deg": deg} for name, deg in pairs]


def _identity(names: List[str]) -> Dict[str, str]:
    return {name: name for name in names}


def s6_system() -> Documents:
    """The diagram of models over the pairs (U, H) of the S^6 example."""
    base = [("x1", 2), ("x2", 2), ("x3", 2), ("v", 1)]
    base_names = [name for name, _ in base]
    dv = {"v": "x1 - x2 - x3"}
    poset = [_node("1_1", "trivial", "trivial")]
    poset += [_node(f"1_{h}", "trivial", _S6_SUBGROUPS[h]) for h in _S6_SUBGROUPS]
    poset.append(_node("1_T", "trivial", "T"))
    poset += [_node(f"{h}_{h}", _S6_SUBGROUPS[h], _S6_SUBGROUPS[h]) for h in _S6_SUBGROUPS]
    poset += [_node(f"{h}_T", _S6_SUBGROUPS[h], "T") for h in _S6_SUBGROUPS]
    poset.append(_node("T_T", "T", "T"))

    algebras: Dict[str, Any] = {
        "1_1": {
            "factors": [
                {
                    "gens": _gens(*base, ("b", 6), ("s", 11)),
                    "d": dict(dv, s="b^2 - x1*x2*x3*b"),
                }
            ]
        },
        "1_T": {"factors": [{"gens": _gens(*base), "d": dict(dv)} for _ in range(2)]},
        "T_T": {"factors": [{"gens": []}, {"gens": []}]},
    }
    maps: List[Dict[str, Any]] = []
    others = {1: "x2*x3", 2: "x1*x3", 3: "x1*x2"}
    for i, h in enumerate(_S6_SUBGROUPS, start=1):
        x, a, t = f"x{i}", f"a{i}", f"t{i}"
        algebras[f"1_{h}"] = {
            "factors": [
                {
                    "gens": _gens(*base, (a, 2), (t, 3)),
                    "d": dict(dv, **{t: f"{a}^2 - {x}*{a}"}),
                }
            ]
        }
        algebras[f"{h}_{h}"] = {"factors": [{"gens": _gens((x, 2), (a, 2), (t, 3)), "d": {t: f"{a}^2 - {x}*{a}"}}]}
        algebras[f"{h}_T"] = {"factors": [{"gens": _gens((x, 2))} for _ in range(2)]}

        square = "*".join(f"{y}^2" for y in others[i].split("*"))
        maps.append(
            {
                "source": "1_1",
                "target": f"1_{h}",
                "factors": [
                    {
                        "from": 0,
                        "images": dict(_identity(base_names), b=f"{others[i]}*{a}", s=f"{square}*{t}"),
                    }
                ],
            }
        )
        maps.append(
            {
                "source": f"1_{h}",
                "target": "1_T",
                "factors": [
                    {"from": 0, "images": dict(_identity(base_names), **{a: "0", t: "0"})},
                    {"from": 0, "images": dict(_identity(base_names), **{a: x, t: "0"})},
                ],
            }
        )
        maps.append(
            {
                "source": f"{h}_{h}",
                "target": f"1_{h}",
                "factors": [{"from": 0, "images": _identity([x, a, t])}],
            }
        )
        maps.append(
            {
                "source": f"{h}_{h}",
                "target": f"{h}_T",
                "factors": [
                    {"from": 0, "images": {x: x, a: "0", t: "0"}},
                    {"from": 0, "images": {x: x, a: x, t: "0"}},
                ],
            }
        )
        maps.append(
            {
                "source": f"{h}_T",
                "target": "1_T",
                "factors": [{"from": 0, "images": {x: x}}, {"from": 1, "images": {x: x}}],
            }
        )
        maps.append(
            {
                "source": "T_T",
                "target": f"{h}_T",
                "factors": [{"from": 0, "images": {}}, {"from": 1, "images": {}}],
            }
        )

    rstructure: Dict[str, List[str]] = {name: ["x3", "x1"] for name in ("1_1", "1_H1", "1_H2", "1_H3", "1_T")}
    for h, image in (("H1", "x1"), ("H2", "-x2"), ("H3", "x3")):
        rstructure[f"{h}_{h}"] = [image]
        rstructure[f"{h}_T"] = [image]
    rstructure["T_T"] = []
    return {
        "s6_system.json": {
            "n": 2,
            "poset": poset,
            "algebras": algebras,
            "maps": maps,
            "rstructure": rstructure,
        }
    }


def ac_family() -> Documents:
    """Q[x, a]/(a^2 - c x^2) for a spread of c."""
    return {f"ac_{_c_suffix(c)}.json": mk_Ac(c).to_dict() for c in AC_FAMILY}


def ac_criterion() -> Documents:
    return {
        f"ac_criterion_{_c_suffix(c)}.json": criterion_data_for_circle_algebra(mk_Ac(c)).to_dict()
        for c in AC_CRITERION
    }


def theta3_triangle() -> Documents:
    """Coordinate-labelled triangle on T^3; its graph cohomology is not free."""
    return {
        "theta3_triangle.json": {
            "n": 3,
            "vertices": ["p", "q", "r"],
            "edges": [
                {"u": "p", "v": "q", "label": [1, 0, 0]},
                {"u": "q", "v": "r", "label": [0, 1, 0]},
                {"u": "r", "v": "p", "label": [0, 0, 1]},
            ],
        }
    }


def double_edge() -> Documents:
    return {
        "double_edge.json": {
            "n": 2,
            "vertices": ["p", "q"],
            "edges": [
                {"u": "p", "v": "q", "label": [1, 0]},
                {"u": "p", "v": "q", "label": [0, 1]},
            ],
        }
    }


def triangle_parallel() -> Documents:
    """A triangle whose edges share one direction, so the class (1,0) holds a cycle."""
    return {
        "triangle_parallel.json": {
            "n": 2,
            "vertices": ["p", "q", "r"],
            "edges": [
                {"u": "p", "v": "q", "label": [1, 0]},
                {"u": "q", "v": "r", "label": [2, 0]},
                {"u": "r", "v": "p", "label": [-1, 0]},
            ],
        }
    }


FIXTURES: Dict[str, Callable[[], Documents]] = {
    "s6-graph": s6_graph,
    "s6-system": s6_system,
    "ac-family": ac_family,
    "ac-criterion": ac_criterion,
    "theta3-triangle": theta3_triangle,
    "double-edge": double_edge,
    "triangle-parallel": triangle_parallel,
}


def fixture_names() -> List[str]:
    return sorted(FIXTURES) + ["all"]


def fixture_documents(name: str) -> Documents:
    """Documents of one fixture, or of every fixture for "all"."""
    if name == "all":
        documents: Documents = {}
        for builder in FIXTURES.values():
            documents.update(builder())
        return documents
    if name not in FIXTURES:
        raise InputError(f"Unknown fixture {name!r}; choose one of {', '.join(fixture_names())}")
    return FIXTURES[name]()


def dump_document(document: Any) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_fixture(name: str, directory: Union[str, Path] = ".") -> List[Path]:
    """Write the fixture's files into directory and return their paths, sorted."""
    documents = fixture_documents(name)
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for filename in sorted(documents):
        path = target / filename
        path.write_text(dump_document(documents[filename]), encoding="utf-8")
        written.append(path)
    logger.info("Fixture written", extra={"fixture": name, "files": len(written)})
    return written
