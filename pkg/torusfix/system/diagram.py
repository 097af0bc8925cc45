"""
Finite systems of cochain algebras over a pair poset.

A SystemDiagram attaches a CdgaPresentation to every pair (U, H) and a morphism to
every covering relation; composites along longer chains are computed on demand.
An optional RStructure supplies the degree-two classes modelling R_{T/U} at each node.
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
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.linalg import SparseMatrix, Vector, solve_many
from ..core.poset import PairPoset
from ..errors import InputError
from .cdga import Cochain, CdgaPresentation, Monomial, ProductCochain, add_cochains

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FactorRoute:
    """Target factor data: the source factor it reads from and the generator images."""

    source: int
    images: Mapping[str, Cochain] = field(default_factory=dict)


class CdgaMorphism:
    """
    A map of product presentations given on generators.

    Each target factor receives from exactly one source factor; generators without
    an image map to zero.
    """

    def __init__(self, source: CdgaPresentation, target: CdgaPresentation, routes: Sequence[FactorRoute]):
        if len(routes) != target.factor_count:
            raise InputError(f"Expected {target.factor_count} factor routes, got {len(routes)}")
        if target.factor_count and not source.factor_count:
            raise InputError("The zero algebra has no unital map to a nonzero algebra")
        for j, route in enumerate(routes):
            if not 0 <= route.source < source.factor_count:
                raise InputError(f"Target factor {j} reads from missing source factor {route.source}")
            names = {g.name for g in source.factors[route.source].generators}
            unknown = set(route.images) - names
            if unknown:
                raise InputError(f"Target factor {j} has images for unknown generators {sorted(unknown)}")
        self.source = source
        self.target = target
        self.routes = tuple(routes)
        self._cache: List[Dict[Monomial, Cochain]] = [{} for _ in self.routes]

    @classmethod
    def from_spec(
        cls, source: CdgaPresentation, target: CdgaPresentation, spec: Sequence[Mapping[str, Any]]
    ) -> "CdgaMorphism":
        """spec[j] = {"from": source factor, "images": {generator: expression}}."""
        if len(spec) != target.factor_count:
            raise InputError(f"Expected {target.factor_count} factor routes, got {len(spec)}")
        routes = []
        for j, entry in enumerate(spec):
            factor = target.factors[j]
            images = {name: factor.parse(str(expr)) for name, expr in dict(entry.get("images", {})).items()}
            routes.append(FactorRoute(int(entry.get("from", 0)), images))
        return cls(source, target, routes)

    @classmethod
    def identity(cls, algebra: CdgaPresentation) -> "CdgaMorphism":
        routes = []
        for j, factor in enumerate(algebra.factors):
            images = {g.name: {factor.generator_monomial(g.name): Fraction(1)} for g in factor.generators}
            routes.append(FactorRoute(j, images))
        return cls(algebra, algebra, routes)

    def image(self, j: int, name: str) -> Cochain:
        return dict(self.routes[j].images.get(name, {}))

    def _apply_monomial(self, j: int, m: Monomial) -> Cochain:
        cache = self._cache[j]
        if m not in cache:
            source = self.source.factors[self.routes[j].source]
            factor = self.target.factors[j]
            result = factor.unit()
            for e, g in zip(m, source.generators):
                for _ in range(e):
                    result = factor.multiply(result, self.image(j, g.name))
            cache[m] = result
        return cache[m]

    def apply(self, x: ProductCochain) -> ProductCochain:
        out = []
        for j, route in enumerate(self.routes):
            value: Cochain = {}
            for m, c in x[route.source].items():
                value = add_cochains(value, self._apply_monomial(j, m), c)
            out.append(value)
        return tuple(out)

    def compose(self, first: "CdgaMorphism") -> "CdgaMorphism":
        """self ∘ first."""
        if first.target is not self.source:
            raise InputError("Morphisms are not composable")
        routes = []
        for j, route in enumerate(self.routes):
            inner = first.routes[route.source]
            images = {}
            middle = [{} for _ in self.source.factors]
            for g in first.source.factors[inner.source].generators:
                middle[route.source] = inner.images.get(g.name, {})
                image = self.apply(tuple(middle))[j]
                if image:
                    images[g.name] = image
            routes.append(FactorRoute(inner.source, images))
        return CdgaMorphism(first.source, self.target, routes)

    def same_as(self, other: "CdgaMorphism") -> bool:
        if len(self.routes) != len(other.routes):
            return False
        for j, (mine, theirs) in enumerate(zip(self.routes, other.routes)):
            source = self.source.factors[mine.source]
            if mine.source != theirs.source and source.generators:
                return False
            for g in source.generators:
                if self.image(j, g.name) != other.image(j, g.name):
                    return False
        return True

    def check(self) -> List[str]:
        """Degree preservation and d-commutation on generators."""
        issues = []
        for j, route in enumerate(self.routes):
            source = self.source.factors[route.source]
            factor = self.target.factors[j]
            for g in source.generators:
                image = self.image(j, g.name)
                try:
                    degree = factor.degree_of(image)
                except InputError:
                    issues.append(f"factor {j}: image of {g.name} is not homogeneous")
                    continue
                if degree is not None and degree != g.degree:
                    issues.append(f"factor {j}: image of {g.name} has degree {degree}, expected {g.degree}")
                    continue
                dg = tuple(
                    source.differential(g.name) if k == route.source else {}
                    for k in range(self.source.factor_count)
                )
                left = self.apply(dg)[j]
                right = factor.d(image)
                if left != right:
                    issues.append(
                        f"factor {j}: d does not commute on {g.name}: "
                        f"f(d{g.name}) = {factor.format(left)}, d(f{g.name}) = {factor.format(right)}"
                    )
        return issues

    def cohomology_columns(self, k: int) -> List[Vector]:
        """Target class coordinates of the images of the source basis of H^k."""
        source = self.source.cohomology(k)
        images = [
            self.target.to_vector(self.apply(self.source.from_vector(rep, k)), k) for rep in source.representatives()
        ]
        return self.target.cohomology(k).coordinates(images)


@dataclass
class RStructure:
    """Degree-two cocycles per node, images of the canonical basis of L(U)⊗Q."""

    classes: Dict[int, Tuple[ProductCochain, ...]]

    def image(self, system: "SystemDiagram", node: int, vector: Sequence[Fraction]) -> ProductCochain:
        """The class of a character vector u in L(U)⊗Q at the node."""
        U = system.poset.pairs[node][0]
        algebra = system.algebras[node]
        basis = U.rational_basis()
        if not basis:
            if any(v != 0 for v in vector):
                raise InputError(f"Vector {list(vector)} is not in L(U)⊗Q at node {system.names[node]}")
            return algebra.zero()
        solution = solve_many(SparseMatrix.from_columns(basis, system.poset.n), [tuple(vector)])[0]
        if solution is None:
            raise InputError(f"Vector {list(vector)} is not in L(U)⊗Q at node {system.names[node]}")
        result = algebra.zero()
        for c, cls in zip(solution, self.classes.get(node, ())):
            if c != 0:
                result = algebra.add(result, cls, c)
        return result


class SystemDiagram:
    def __init__(
        self,
        poset: PairPoset,
        names: Sequence[str],
        algebras: Sequence[CdgaPresentation],
        maps: Mapping[Tuple[int, int], CdgaMorphism],
        rstructure: Optional[RStructure] = None,
    ):
        if len(names) != len(poset) or len(algebras) != len(poset):
            raise InputError("Every pair of the poset needs a name and an algebra")
        if len(set(names)) != len(names):
            raise InputError("Node names must be unique")
        covers = set(poset.covers())
        for key, morphism in maps.items():
            if key not in covers:
                i, j = key
                raise InputError(f"Map {names[i]} -> {names[j]} is not on a covering relation")
            if morphism.source is not algebras[key[0]] or morphism.target is not algebras[key[1]]:
                raise InputError(f"Map {names[key[0]]} -> {names[key[1]]} has the wrong endpoints")
        for i, j in covers:
            if (i, j) not in maps:
                raise InputError(f"Missing map for covering relation {names[i]} -> {names[j]}")
        self.poset = poset
        self.names = list(names)
        self.algebras = list(algebras)
        self.maps = dict(maps)
        self.rstructure = rstructure
        self._composites: Dict[Tuple[int, int], CdgaMorphism] = {}

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError as exc:
            raise InputError(f"Unknown node {name!r}") from exc

    def label(self, i: int) -> str:
        return self.names[i]

    def first_steps(self, i: int, j: int) -> List[int]:
        """Covers i ⋖ k with k ≤ j."""
        return [k for (a, k) in self.poset.covers() if a == i and self.poset.leq(k, j)]

    def composite(self, i: int, j: int) -> CdgaMorphism:
        """The map A(i) -> A(j) along the first chain of covers."""
        if not self.poset.leq(i, j):
            raise InputError(f"{self.names[i]} is not below {self.names[j]}")
        key = (i, j)
        if key not in self._composites:
            if i == j:
                self._composites[key] = CdgaMorphism.identity(self.algebras[i])
            else:
                k = self.first_steps(i, j)[0]
                self._composites[key] = self.composite(k, j).compose(self.maps[(i, k)])
        return self._composites[key]

    def rho(self, node: int, vector: Sequence[Fraction]) -> ProductCochain:
        if self.rstructure is None:
            raise InputError("The system has no R-structure")
        return self.rstructure.image(self, node, vector)


@dataclass
class SystemValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {"valid": self.valid, "violations": list(self.violations)}


def _validate_rstructure(system: SystemDiagram, issues: List[str]) -> None:
    structure = system.rstructure
    assert structure is not None
    for i, (U, _) in enumerate(system.poset.pairs):
        classes = structure.classes.get(i, ())
        if len(classes) != U.rank:
            issues.append(f"R-structure at {system.names[i]} has {len(classes)} classes, expected {U.rank}")
            continue
        algebra = system.algebras[i]
        for position, cls in enumerate(classes):
            try:
                algebra.to_vector(cls, 2)
            except InputError:
                issues.append(f"R-structure class {position} at {system.names[i]} is not of degree 2")
                continue
            if any(algebra.d(cls)):
                issues.append(f"R-structure class {position} at {system.names[i]} is not a cocycle")
    if issues:
        return
    for i, j in system.poset.covers():
        U = system.poset.pairs[i][0]
        target = system.algebras[j]
        f = system.maps[(i, j)]
        for row in U.rational_basis():
            difference = target.add(f.apply(system.rho(i, row)), system.rho(j, row), Fraction(-1))
            if not target.is_exact(difference, 2):
                issues.append(
                    f"R-structure is not natural along {system.names[i]} -> {system.names[j]} "
                    f"for character {[int(v) for v in row]}"
                )


def validate_system(system: SystemDiagram) -> SystemValidationReport:
    """Check differentials, edge maps, composition squares and the R-structure."""
    report = SystemValidationReport()
    issues = report.violations
    for i, algebra in enumerate(system.algebras):
        issues.extend(f"node {system.names[i]}: {issue}" for issue in algebra.validate())
    for (i, j), morphism in sorted(system.maps.items()):
        issues.extend(f"map {system.names[i]} -> {system.names[j]}: {issue}" for issue in morphism.check())
    if issues:
        return report

    for i in system.poset.ordered():
        for j in system.poset.upper_set(i):
            steps = system.first_steps(i, j)
            if len(steps) < 2:
                continue
            reference = system.composite(i, j)
            for k in steps[1:]:
                other = system.composite(k, j).compose(system.maps[(i, k)])
                if not other.same_as(reference):
                    issues.append(
                        f"square {system.names[i]} -> {system.names[j]} does not commute "
                        f"(via {system.names[steps[0]]} and via {system.names[k]})"
                    )
    if not issues and system.rstructure is not None:
        _validate_rstructure(system, issues)
    logger.info(
        "System validated",
        extra={"nodes": len(system.names), "maps": len(system.maps), "violations": len(issues)},
    )
    return report

