"""
Input file loaders.

Files are JSON, or YAML when the suffix is .yml/.yaml. Every document is checked
against its schema before it is turned into library objects; schema and parse
failures surface as InputError naming the offending path.
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
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

import jsonschema
import yaml

from ..circle.algebra import CircleAlgebra
from ..core.lattice import SubgroupLattice, parse_subgroup
from ..core.linalg import to_fraction
from ..core.poset import PairPoset
from ..errors import InputError
from ..graphs.tgraph import TGraph
from ..system.cdga import CdgaPresentation
from ..system.criterion import CriterionData, Element, GradedAlgebraPresentation
from ..system.diagram import CdgaMorphism, RStructure, SystemDiagram
from .schema import INPUT_SCHEMAS

logger = logging.getLogger(__name__)


def read_document(path: Union[str, Path]) -> Any:
    """Parse a JSON or YAML file."""
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc.strerror or exc}") from exc
    try:
        if path.suffix.lower() in (".yml", ".yaml"):
            return yaml.safe_load(content)
        return json.loads(content)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise InputError(f"Failed to parse {path}: {exc}") from exc


def validate_document(document: Any, kind: str) -> None:
    """Check a parsed document against the input schema of the given kind."""
    if kind not in INPUT_SCHEMAS:
        raise InputError(f"Unknown input kind {kind!r}")
    try:
        jsonschema.validate(instance=document, schema=INPUT_SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{kind} input is invalid at {where}: {exc.message}") from exc


def _load(source: Union[str, Path, Mapping[str, Any]]) -> Any:
    return source if isinstance(source, Mapping) else read_document(source)


def graph_from_document(document: Mapping[str, Any]) -> TGraph:
    validate_document(document, "graph")
    return TGraph.build(
        document["n"],
        document["vertices"],
        [(e["u"], e["v"], e["label"]) for e in document["edges"]],
    )


def load_graph(source: Union[str, Path, Mapping[str, Any]]) -> TGraph:
    return graph_from_document(_load(source))


def algebra_from_document(document: Mapping[str, Any]) -> CircleAlgebra:
    validate_document(document, "algebra")
    mult: Dict[Tuple[str, str], List[Tuple[str, Any, int]]] = {}
    for entry in document.get("mult", []):
        key = (entry["l"], entry["r"])
        if key in mult:
            raise InputError(f"Product ({entry['l']}, {entry['r']}) is given twice")
        mult[key] = [(t["g"], t["coef"], t["xpow"]) for t in entry["terms"]]
    return CircleAlgebra.build(
        free=[(g["name"], g["deg"]) for g in document["free"]],
        torsion=[(g["name"], g["deg"], g["order"]) for g in document.get("torsion", [])],
        unit=document.get("unit"),
        mult=mult,
    )


def load_algebra(source: Union[str, Path, Mapping[str, Any]]) -> CircleAlgebra:
    return algebra_from_document(_load(source))


@dataclass
class LoadedSystem:
    """A system diagram plus the extra tori named for localization checks."""

    system: SystemDiagram
    tori: List[SubgroupLattice] = field(default_factory=list)


def system_from_document(document: Mapping[str, Any]) -> LoadedSystem:
    validate_document(document, "system")
    n = document["n"]
    names = [entry["name"] for entry in document["poset"]]
    pairs = [(parse_subgroup(e["U"], n), parse_subgroup(e["H"], n)) for e in document["poset"]]
    d_right = [parse_subgroup(g, n) for g in document["d_right"]] if "d_right" in document else None
    d_left = [parse_subgroup(g, n) for g in document["d_left"]] if "d_left" in document else None
    poset = PairPoset(n, pairs, d_right, d_left)
    if len(set(names)) != len(names):
        raise InputError("Node names must be unique")

    specs = document["algebras"]
    missing = [name for name in names if name not in specs]
    if missing:
        raise InputError(f"No algebra given for nodes {missing}")
    extra = sorted(set(specs) - set(names))
    if extra:
        raise InputError(f"Algebras given for unknown nodes {extra}")
    algebras = []
    for name in names:
        try:
            algebras.append(CdgaPresentation.from_spec(specs[name]["factors"]))
        except InputError as exc:
            raise InputError(f"Algebra at {name}: {exc}") from exc

    index = {name: i for i, name in enumerate(names)}
    maps: Dict[Tuple[int, int], CdgaMorphism] = {}
    for entry in document["maps"]:
        for end in ("source", "target"):
            if entry[end] not in index:
                raise InputError(f"Map refers to unknown node {entry[end]!r}")
        i, j = index[entry["source"]], index[entry["target"]]
        if (i, j) in maps:
            raise InputError(f"Map {entry['source']} -> {entry['target']} is given twice")
        try:
            maps[(i, j)] = CdgaMorphism.from_spec(algebras[i], algebras[j], entry["factors"])
        except InputError as exc:
            raise InputError(f"Map {entry['source']} -> {entry['target']}: {exc}") from exc

    rstructure = None
    if "rstructure" in document:
        classes = {}
        for name, expressions in document["rstructure"].items():
            if name not in index:
                raise InputError(f"R-structure given for unknown node {name!r}")
            algebra = algebras[index[name]]
            classes[index[name]] = tuple(algebra.parse(e) for e in expressions)
        rstructure = RStructure(classes)

    system = SystemDiagram(poset, names, algebras, maps, rstructure)
    tori = [parse_subgroup(g, n) for g in document.get("tori", [])]
    logger.debug("System loaded", extra={"nodes": len(names), "maps": len(maps)})
    return LoadedSystem(system, tori)


def load_system(source: Union[str, Path, Mapping[str, Any]]) -> LoadedSystem:
    return system_from_document(_load(source))


def _element(terms: Sequence[Mapping[str, Any]], rank: int) -> Element:
    element: Element = {}
    for term in terms:
        exponent = tuple(int(e) for e in term.get("exp", [0] * rank))
        if len(exponent) != rank:
            raise InputError(f"Exponent {list(exponent)} of {term['gen']} needs {rank} entries")
        key = (exponent, term["gen"])
        element[key] = element.get(key, Fraction(0)) + to_fraction(term["coef"])
    return element


def criterion_from_document(document: Mapping[str, Any]) -> CriterionData:
    validate_document(document, "criterion")
    n = document["n"]
    subspaces = [[tuple(to_fraction(c) for c in v) for v in basis] for basis in document["subspaces"]]
    if len(document["algebras"]) != len(subspaces):
        raise InputError("Every subspace needs an algebra")
    algebras = []
    for position, (spec, basis) in enumerate(zip(document["algebras"], subspaces)):
        rank = len(basis)
        try:
            algebras.append(
                GradedAlgebraPresentation(
                    rank,
                    [(g["name"], g["deg"]) for g in spec["generators"]],
                    [_element(r, rank) for r in spec.get("relations", [])],
                    {(p["l"], p["r"]): _element(p["value"], rank) for p in spec.get("products", [])},
                    _element(spec.get("unit", []), rank),
                )
            )
        except InputError as exc:
            raise InputError(f"Algebra A{position}: {exc}") from exc
    maps: Dict[Tuple[int, int], Dict[str, Element]] = {}
    for entry in document["maps"]:
        i, j = entry["source"], entry["target"]
        if not (i < len(subspaces) and j < len(subspaces)):
            raise InputError(f"Map f{i}{j} refers to a missing algebra")
        if (i, j) in maps:
            raise InputError(f"Map f{i}{j} is given twice")
        rank = len(subspaces[i])
        maps[(i, j)] = {name: _element(terms, rank) for name, terms in entry["images"].items()}
    tests = None
    if "tests" in document:
        tests = [[tuple(to_fraction(c) for c in v) for v in basis] for basis in document["tests"]]
    return CriterionData(n, subspaces, algebras, maps, tests)


def load_criterion(source: Union[str, Path, Mapping[str, Any]]) -> CriterionData:
    return criterion_from_document(_load(source))
