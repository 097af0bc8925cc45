"""
Graded algebras over Q[x] in PID normal form, and finite commutative Q-algebras.

A CircleAlgebra is given by free and x-power torsion generators together with
structure constants g_i g_j = Σ c x^p g_k. Its degree-k part has the Q-basis
{x^m g : 2m + |g| = k, m < order(g) for torsion generators}.
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

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..core.linalg import SparseMatrix, Vector, format_fraction, rank, to_fraction
from ..errors import InputError

logger = logging.getLogger(__name__)

# (x-power, generator name) -> coefficient
Element = Dict[Tuple[int, str], Fraction]


@dataclass(frozen=True)
class CircleGenerator:
    name: str
    degree: int
    order: Optional[int] = None

    @property
    def is_free(self) -> bool:
        return self.order is None


@dataclass(frozen=True)
class CircleTerm:
    """c · x^xpow · generator."""

    generator: str
    coefficient: Fraction
    xpow: int


@dataclass(frozen=True)
class CircleAlgebra:
    generators: Tuple[CircleGenerator, ...]
    unit: Tuple[Tuple[str, Fraction], ...]
    products: Tuple[Tuple[Tuple[str, str], Tuple[CircleTerm, ...]], ...] = ()

    @classmethod
    def build(
        cls,
        free: Sequence[Tuple[str, int]],
        torsion: Sequence[Tuple[str, int, int]] = (),
        unit: Any = None,
        mult: Optional[Mapping[Tuple[str, str], Sequence[Tuple[str, object, int]]]] = None,
    ) -> "CircleAlgebra":
        generators = [CircleGenerator(name, int(deg)) for name, deg in free]
        generators += [CircleGenerator(name, int(deg), int(order)) for name, deg, order in torsion]
        if unit is None:
            unit_terms: Tuple[Tuple[str, Fraction], ...] = ()
        elif isinstance(unit, str):
            unit_terms = ((unit, Fraction(1)),)
        else:
            unit_terms = tuple((name, to_fraction(c)) for name, c in dict(unit).items())
        products = []
        for (left, right), terms in (mult or {}).items():
            products.append(
                (
                    (left, right),
                    tuple(CircleTerm(g, to_fraction(c), int(p)) for g, c, p in terms),
                )
            )
        return cls(tuple(generators), unit_terms, tuple(products))

    @property
    def free_gens(self) -> List[CircleGenerator]:
        return [g for g in self.generators if g.is_free]

    @property
    def torsion_gens(self) -> List[CircleGenerator]:
        return [g for g in self.generators if not g.is_free]

    def generator(self, name: str) -> CircleGenerator:
        for g in self.generators:
            if g.name == name:
                return g
        raise InputError(f"Unknown generator {name!r}")

    @property
    def single_unit(self) -> Optional[str]:
        if len(self.unit) == 1 and self.unit[0][1] == 1:
            return self.unit[0][0]
        return None

    def _table(self) -> Dict[Tuple[str, str], Tuple[CircleTerm, ...]]:
        return dict(self.products)

    def product(self, left: str, right: str) -> Element:
        """g_left · g_right as an element, using the table, graded symmetry and unit law."""
        table = self._table()
        if (left, right) in table:
            return self._normalize({(t.xpow, t.generator): t.coefficient for t in table[(left, right)]})
        if (right, left) in table:
            sign = -1 if self.generator(left).degree % 2 and self.generator(right).degree % 2 else 1
            terms = table[(right, left)]
            return self._normalize({(t.xpow, t.generator): sign * t.coefficient for t in terms})
        unit = self.single_unit
        if unit == left:
            return self._normalize({(0, right): Fraction(1)})
        if unit == right:
            return self._normalize({(0, left): Fraction(1)})
        return {}

    def _normalize(self, element: Mapping[Tuple[int, str], Fraction]) -> Element:
        out: Element = {}
        for (p, name), c in element.items():
            g = self.generator(name)
            if c == 0 or (g.order is not None and p >= g.order):
                continue
            out[(p, name)] = out.get((p, name), Fraction(0)) + c
        return {k: v for k, v in out.items() if v != 0}

    def multiply(self, a: Mapping[Tuple[int, str], Fraction], b: Mapping[Tuple[int, str], Fraction]) -> Element:
        out: Dict[Tuple[int, str], Fraction] = {}
        for (pa, ga), ca in a.items():
            for (pb, gb), cb in b.items():
                for (pc, gc), cc in self.product(ga, gb).items():
                    key = (pa + pb + pc, gc)
                    out[key] = out.get(key, Fraction(0)) + ca * cb * cc
        return self._normalize(out)

    def unit_element(self) -> Element:
        return self._normalize({(0, name): c for name, c in self.unit})

    def degree_basis(self, k: int) -> List[Tuple[int, str]]:
        """Q-basis of the degree-k part as (x-power, generator) pairs."""
        basis = []
        for g in self.generators:
            if k < g.degree or (k - g.degree) % 2:
                continue
            p = (k - g.degree) // 2
            if g.order is None or p < g.order:
                basis.append((p, g.name))
        return basis

    def degree_dimension(self, k: int) -> int:
        return len(self.degree_basis(k))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "free": [{"name": g.name, "deg": g.degree} for g in self.free_gens],
            "torsion": [{"name": g.name, "deg": g.degree, "order": g.order} for g in self.torsion_gens],
            "mult": [
                {
                    "l": left,
                    "r": right,
                    "terms": [
                        {"g": t.generator, "coef": format_fraction(t.coefficient), "xpow": t.xpow}
                        for t in terms
                    ],
                }
                for (left, right), terms in self.products
            ],
        }
        unit = self.single_unit
        if unit is not None:
            data["unit"] = unit
        else:
            data["unit"] = {name: format_fraction(c) for name, c in self.unit}
        return data


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {"valid": self.valid, "violations": list(self.violations)}


def validate(algebra: CircleAlgebra) -> ValidationReport:
    """Check every invariant of the normal form; lists each violated identity."""
    report = ValidationReport()
    issues = report.violations
    names = [g.name for g in algebra.generators]
    if len(set(names)) != len(names):
        issues.append("generator names are not unique")
        return report
    for g in algebra.generators:
        if g.degree < 0:
            issues.append(f"generator {g.name} has negative degree")
        if g.order is not None and g.order < 1:
            issues.append(f"torsion generator {g.name} has order {g.order} < 1")
    if algebra.generators and not algebra.unit:
        issues.append("no unit designated")
    for name, _ in algebra.unit:
        if name not in names:
            issues.append(f"unit refers to unknown generator {name}")
        elif algebra.generator(name).degree != 0:
            issues.append(f"unit generator {name} is not in degree 0")
    seen = set()
    for (left, right), terms in algebra.products:
        if (left, right) in seen:
            issues.append(f"product ({left}, {right}) given twice")
        seen.add((left, right))
        if left not in names or right not in names:
            issues.append(f"product ({left}, {right}) refers to an unknown generator")
            continue
        total = algebra.generator(left).degree + algebra.generator(right).degree
        for term in terms:
            if term.generator not in names:
                issues.append(f"product ({left}, {right}) has a term in unknown generator {term.generator}")
            elif term.xpow < 0 or algebra.generator(term.generator).degree + 2 * term.xpow != total:
                issues.append(f"product ({left}, {right}) has an inhomogeneous term in {term.generator}")
    if issues:
        return report

    table = dict(algebra.products)
    for (left, right) in table:
        if (right, left) in table and left < right:
            sign = -1 if algebra.generator(left).degree % 2 and algebra.generator(right).degree % 2 else 1
            direct = algebra.product(left, right)
            swapped = algebra._normalize(
                {(t.xpow, t.generator): sign * t.coefficient for t in table[(right, left)]}
            )
            if direct != swapped:
                issues.append(f"graded commutativity fails for ({left}, {right})")
        if left == right and algebra.generator(left).degree % 2 and algebra.product(left, left):
            issues.append(f"odd generator {left} has nonzero square")

    for g in algebra.generators:
        e = {(0, g.name): Fraction(1)}
        unit = algebra.unit_element()
        if algebra.multiply(unit, e) != algebra._normalize(e) or algebra.multiply(e, unit) != algebra._normalize(e):
            issues.append(f"unit law fails for {g.name}")

    for g in algebra.torsion_gens:
        for h in algebra.generators:
            for (p, name), c in algebra.product(g.name, h.name).items():
                target = algebra.generator(name)
                if target.order is None or p + g.order < target.order:
                    issues.append(f"x^{g.order} does not annihilate {g.name}·{h.name}")
                    break

    for a, b, c in itertools.product(algebra.generators, repeat=3):
        ea, eb, ec = ({(0, g.name): Fraction(1)} for g in (a, b, c))
        if algebra.multiply(algebra.multiply(ea, eb), ec) != algebra.multiply(ea, algebra.multiply(eb, ec)):
            issues.append(f"associativity fails for ({a.name}, {b.name}, {c.name})")
    return report


def mk_Ac(c: object) -> CircleAlgebra:
    """Q[x, a]/(a^2 - c x^2) with |a| = 2."""
    value = to_fraction(c)
    terms = [("one", value, 2)] if value != 0 else []
    return CircleAlgebra.build(free=[("one", 0), ("a", 2)], unit="one", mult={("a", "a"): terms})


@dataclass(frozen=True)
class FiniteCommAlgebra:
    """A finite-dimensional commutative Q-algebra given by structure constants c[i][j][k]."""

    names: Tuple[str, ...]
    structure: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    unit: Tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return len(self.names)

    def multiply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        r = self.dimension
        out = [Fraction(0)] * r
        for i in range(r):
            if u[i] == 0:
                continue
            for j in range(r):
                if v[j] == 0:
                    continue
                coefficient = u[i] * v[j]
                for k, c in enumerate(self.structure[i][j]):
                    if c != 0:
                        out[k] += coefficient * c
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dimension))

    def validate(self) -> List[str]:
        issues = []
        r = self.dimension
        if len(self.structure) != r or any(len(row) != r or any(len(c) != r for c in row) for row in self.structure):
            return ["structure constants do not match the dimension"]
        if len(self.unit) != r:
            return ["unit vector does not match the dimension"]
        basis = [self.basis_vector(i) for i in range(r)]
        for i, j in itertools.combinations(range(r), 2):
            if self.structure[i][j] != self.structure[j][i]:
                issues.append(f"commutativity fails for ({self.names[i]}, {self.names[j]})")
        for i in range(r):
            if self.multiply(self.unit, basis[i]) != basis[i]:
                issues.append(f"unit law fails for {self.names[i]}")
        for i, j, k in itertools.product(range(r), repeat=3):
            if self.multiply(self.multiply(basis[i], basis[j]), basis[k]) != self.multiply(
                basis[i], self.multiply(basis[j], basis[k])
            ):
                issues.append(f"associativity fails for ({self.names[i]}, {self.names[j]}, {self.names[k]})")
        return issues

    def format_element(self, vector: Sequence[Fraction]) -> str:
        pieces = []
        for name, c in zip(self.names, vector):
            if c == 0:
                continue
            magnitude = abs(c)
            text = name if magnitude == 1 else f"{format_fraction(magnitude)}*{name}"
            pieces.append(("-" if c < 0 else "+", text))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


def degree_zero_algebra(algebra: CircleAlgebra) -> FiniteCommAlgebra:
    """A^0 with basis the degree-zero generators."""
    basis = [g.name for g in algebra.generators if g.degree == 0]
    index = {name: i for i, name in enumerate(basis)}
    structure = []
    for left in basis:
        row = []
        for right in basis:
            coefficients = [Fraction(0)] * len(basis)
            for (p, name), c in algebra.product(left, right).items():
                coefficients[index[name]] += c
            row.append(tuple(coefficients))
        structure.append(tuple(row))
    unit = [Fraction(0)] * len(basis)
    for name, c in algebra.unit:
        if name in index:
            unit[index[name]] += c
    return FiniteCommAlgebra(tuple(basis), tuple(structure), tuple(unit))


def x_multiplication_injective(algebra: CircleAlgebra) -> bool:
    """Is a ↦ x·a injective from A^0 to A^2?"""
    source = algebra.degree_basis(0)
    target = algebra.degree_basis(2)
    position = {b: i for i, b in enumerate(target)}
    columns = []
    for p, name in source:
        column = [Fraction(0)] * len(target)
        for key, c in algebra._normalize({(p + 1, name): Fraction(1)}).items():
            column[position[key]] += c
        columns.append(tuple(column))
    if not columns:
        return True
    return rank(SparseMatrix.from_columns(columns, len(target))) == len(source)


def localized_name(generator: CircleGenerator) -> str:
    half = generator.degree // 2
    if half == 0:
        return generator.name
    if half == 1:
        return f"{generator.name}/x"
    return f"{generator.name}/x^{half}"


def localized_degree_zero(algebra: CircleAlgebra) -> FiniteCommAlgebra:
    """(S^{-1}A)^0 with basis g/x^{|g|/2} over the free generators."""
    free = algebra.free_gens
    for g in free:
        if g.degree % 2:
            raise InputError(f"Free generator {g.name} has odd degree; its localization is nilpotent")
    index = {g.name: i for i, g in enumerate(free)}
    structure = []
    for left in free:
        row = []
        for right in free:
            coefficients = [Fraction(0)] * len(free)
            for (p, name), c in algebra.product(left.name, right.name).items():
                if name in index:
                    coefficients[index[name]] += c
            row.append(tuple(coefficients))
        structure.append(tuple(row))
    unit = [Fraction(0)] * len(free)
    for name, c in algebra.unit:
        if name in index:
            unit[index[name]] += c
    names = tuple(localized_name(g) for g in free)
    logger.debug("Localized degree-zero algebra built", extra={"dimension": len(free)})
    return FiniteCommAlgebra(names, tuple(structure), tuple(unit))
