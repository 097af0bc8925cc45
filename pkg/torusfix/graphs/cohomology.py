"""
Graph cohomology of T-graphs.

H^{2d}(Γ) is the space of vertex tuples of degree-d polynomials whose differences
across every edge are divisible by the edge label. Divisibility is tested by
restricting to the label's hyperplane, so each degree is one exact kernel computation.
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

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from ..core.linalg import SparseMatrix, Vector, complement, kernel_basis
from ..core.polynomials import (
    HomogeneousPoly,
    LinearForm,
    format_poly,
    monomial_basis,
    monomial_index,
    restrict_to_hyperplane,
)
from ..errors import InputError, InvariantViolation
from .tgraph import TGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphCohClass:
    """A class of H^{2d}(Γ), stored as its vertex tuple."""

    graph: TGraph
    deg: int
    values: Tuple[HomogeneousPoly, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.graph.vertices):
            raise InputError("A class needs one polynomial per vertex")
        for value in self.values:
            if value.n != self.graph.n or (value.deg != self.deg and not value.is_zero()):
                raise InputError(f"Vertex polynomial does not have degree {self.deg}")
        for index, edge in enumerate(self.graph.edges):
            difference = self.at(edge.u) - self.at(edge.v)
            if not restrict_to_hyperplane(difference, edge.form()).is_zero():
                raise InvariantViolation(f"Class violates divisibility along edge {index}")

    @property
    def degree(self) -> int:
        """Cohomological degree."""
        return 2 * self.deg

    def at(self, vertex: str) -> HomogeneousPoly:
        return self.values[self.graph.vertex_index(vertex)]

    def flatten(self) -> Vector:
        """Concatenated coefficient vectors over monomial_basis(n, deg)."""
        size = len(monomial_basis(self.graph.n, self.deg))
        out: List[Fraction] = []
        for value in self.values:
            out.extend(value.coefficient_vector() if not value.is_zero() else (Fraction(0),) * size)
        return tuple(out)

    @classmethod
    def from_flat(cls, graph: TGraph, deg: int, vector: Vector) -> "GraphCohClass":
        size = len(monomial_basis(graph.n, deg))
        values = tuple(
            HomogeneousPoly.from_vector(graph.n, deg, vector[i * size:(i + 1) * size])
            for i in range(len(graph.vertices))
        )
        return cls(graph, deg, values)

    def scale(self, r: HomogeneousPoly) -> "GraphCohClass":
        """Module action of r in R_T, vertexwise."""
        return GraphCohClass(self.graph, self.deg + r.deg, tuple(r * v for v in self.values))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "values": {v: format_poly(p) for v, p in zip(self.graph.vertices, self.values)},
        }


def multiply_classes(a: GraphCohClass, b: GraphCohClass) -> GraphCohClass:
    """Vertexwise product."""
    if a.graph != b.graph:
        raise InputError("Classes of different graphs cannot be multiplied")
    return GraphCohClass(a.graph, a.deg + b.deg, tuple(p * q for p, q in zip(a.values, b.values)))


@lru_cache(maxsize=None)
def _restriction_matrix(label: Tuple[int, ...], deg: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Columns: restrictions of each degree-deg monomial to ker(label)."""
    n = len(label)
    form = LinearForm.of(label)
    target = monomial_index(n - 1, deg)
    columns = []
    for exponent in monomial_basis(n, deg):
        restricted = restrict_to_hyperplane(HomogeneousPoly.from_dict(n, deg, {exponent: 1}), form)
        column = [Fraction(0)] * len(target)
        for monomial, value in restricted.terms:
            column[target[monomial]] = value
        columns.append(tuple(column))
    return tuple(columns)


@lru_cache(maxsize=256)
def _basis_vectors(graph: TGraph, d: int) -> Tuple[Vector, ...]:
    size = len(monomial_basis(graph.n, d))
    rows_per_edge = len(monomial_basis(graph.n - 1, d))
    entries: Dict[Tuple[int, int], Fraction] = {}
    for e, edge in enumerate(graph.edges):
        columns = _restriction_matrix(edge.label, d)
        p = graph.vertex_index(edge.u)
        q = graph.vertex_index(edge.v)
        for m, column in enumerate(columns):
            for r, value in enumerate(column):
                if value == 0:
                    continue
                row = e * rows_per_edge + r
                entries[(row, p * size + m)] = entries.get((row, p * size + m), Fraction(0)) + value
                entries[(row, q * size + m)] = entries.get((row, q * size + m), Fraction(0)) - value
    matrix = SparseMatrix(len(graph.edges) * rows_per_edge, len(graph.vertices) * size, entries)
    basis = tuple(kernel_basis(matrix))
    logger.debug("Graph cohomology degree computed", extra={"degree": 2 * d, "dimension": len(basis)})
    return basis


def graph_cohomology_basis(graph: TGraph, d: int) -> List[GraphCohClass]:
    """Exact basis of H^{2d}(Γ)."""
    if d < 0:
        raise InputError(f"Degree must be non-negative, got {d}")
    return [GraphCohClass.from_flat(graph, d, v) for v in _basis_vectors(graph, d)]


def hilbert_function(graph: TGraph, D: int) -> List[int]:
    """dim H^{2d}(Γ) for d = 0..D."""
    return [len(_basis_vectors(graph, d)) for d in range(D + 1)]


def _decomposables(graph: TGraph, d: int) -> List[Vector]:
    """R^2_T · H^{2d-2}(Γ), flattened in degree d."""
    if d == 0:
        return []
    out = []
    for cls in graph_cohomology_basis(graph, d - 1):
        for i in range(graph.n):
            out.append(cls.scale(HomogeneousPoly.variable(graph.n, i)).flatten())
    return out


def minimal_generators(graph: TGraph, D: int) -> List[Tuple[int, GraphCohClass]]:
    """(cohomological degree, class) for a minimal generating set up to degree D."""
    result = []
    for d in range(D // 2 + 1):
        basis = _basis_vectors(graph, d)
        dim = len(graph.vertices) * len(monomial_basis(graph.n, d))
        chosen = complement(_decomposables(graph, d), list(basis), dim)
        for index in chosen:
            result.append((2 * d, GraphCohClass.from_flat(graph, d, basis[index])))
    return result


class FreenessKind(Enum):
    FREE_UP_TO = "free-up-to"
    NOT_FREE = "not-free"


@dataclass(frozen=True)
class Syzygy:
    """A relation Σ r_i g_i = 0 among generators, in cohomological degree `degree`."""

    degree: int
    coefficients: Tuple[Tuple[int, HomogeneousPoly], ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "coefficients": [{"generator": g, "poly": format_poly(p)} for g, p in self.coefficients],
        }


@dataclass(frozen=True)
class FreenessReport:
    degree_bound: int
    generator_degrees: Tuple[int, ...]
    kind: FreenessKind
    syzygy: Optional[Syzygy] = None
    rank_excess: Optional[Tuple[int, int]] = None

    @property
    def is_free(self) -> bool:
        return self.kind is FreenessKind.FREE_UP_TO

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "degree_bound": self.degree_bound,
            "generator_degrees": list(self.generator_degrees),
            "verdict": self.kind.value,
        }
        if self.syzygy is not None:
            data["certificate"] = {"kind": "syzygy", **self.syzygy.to_dict()}
        elif self.rank_excess is not None:
            data["certificate"] = {
                "kind": "rank-excess",
                "generators": self.rank_excess[0],
                "generic_rank": self.rank_excess[1],
            }
        return data


def freeness_probe(graph: TGraph, D: int) -> FreenessReport:
    """Compare the free module on minimal generators with H*(Γ) degreewise up to D."""
    generators = minimal_generators(graph, D)
    degrees = tuple(deg for deg, _ in generators)
    if len(generators) > len(graph.vertices):
        logger.info("Generator count exceeds generic rank", extra={"generators": len(generators)})
        return FreenessReport(
            D, degrees, FreenessKind.NOT_FREE, rank_excess=(len(generators), len(graph.vertices))
        )
    n = graph.n
    for d in range(D // 2 + 1):
        columns = []
        labels = []
        for g, (deg, cls) in enumerate(generators):
            gd = deg // 2
            if gd > d:
                continue
            for exponent in monomial_basis(n, d - gd):
                monomial = HomogeneousPoly.from_dict(n, d - gd, {exponent: 1})
                columns.append(cls.scale(monomial).flatten())
                labels.append((g, d - gd, exponent))
        if not columns:
            continue
        size = len(graph.vertices) * len(monomial_basis(n, d))
        relations = kernel_basis(SparseMatrix.from_columns(columns, size))
        if relations:
            relation = relations[0]
            coefficients: Dict[int, Dict[Tuple[int, ...], Fraction]] = {}
            poly_degree: Dict[int, int] = {}
            for value, (g, pd, exponent) in zip(relation, labels):
                if value != 0:
                    coefficients.setdefault(g, {})[exponent] = value
                    poly_degree[g] = pd
            syzygy = Syzygy(
                2 * d,
                tuple(
                    (g, HomogeneousPoly.from_dict(n, poly_degree[g], coeffs))
                    for g, coeffs in sorted(coefficients.items())
                ),
            )
            return FreenessReport(D, degrees, FreenessKind.NOT_FREE, syzygy=syzygy)
    return FreenessReport(D, degrees, FreenessKind.FREE_UP_TO)
