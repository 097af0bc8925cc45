"""
Realizability criterion for finite families of graded algebras over polynomial rings.

The data are subspaces V_i of Q^n, algebras A_i presented over Q[V_i] by generators,
relations and structure constants, and maps f_ij : A_i -> Q[V_i] ⊗_{Q[V_j]} A_j
given on generators. Three conditions are checked: sum-closure of the subspaces,
per-algebra hypotheses, and cocycle identities together with bounded localization
searches.
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

from ..circle.algebra import CircleAlgebra, FiniteCommAlgebra, localized_degree_zero, localized_name
from ..circle.splitting import split_semisimple_test
from ..core.linalg import (
    QuotientSpace,
    SparseMatrix,
    Vector,
    complement,
    format_fraction,
    kernel_basis,
    solve_many,
    span_basis,
    span_rank,
    unit_vector,
)
from ..core.polynomials import Exponent, HomogeneousPoly, monomial_basis
from ..errors import InputError, InvariantViolation
from .annihilators import (
    AnnihilatorPolicy,
    Multiplier,
    PendingClass,
    Survivor,
    annihilator_search,
    candidate_forms,
    multiplier_degree,
)
from .conditions import ConditionVerdict, ItemStatus, VerdictKind

logger = logging.getLogger(__name__)

# (exponent over the polynomial variables, generator name) -> coefficient
Element = Dict[Tuple[Exponent, str], Fraction]


def _add(x: Element, y: Element, scale: Fraction = Fraction(1)) -> Element:
    out = dict(x)
    for key, c in y.items():
        value = out.get(key, Fraction(0)) + scale * c
        if value == 0:
            out.pop(key, None)
        else:
            out[key] = value
    return out


class GradedAlgebraPresentation:
    """
    A graded commutative algebra over Q[y_1..y_r], |y_a| = 2.

    Degree-k components are the free module on the generators in degree k modulo the
    Q-span of monomial multiples of the relations.
    """

    def __init__(
        self,
        rank: int,
        generators: Sequence[Tuple[str, int]],
        relations: Sequence[Element] = (),
        products: Optional[Mapping[Tuple[str, str], Element]] = None,
        unit: Optional[Element] = None,
    ):
        self.rank = rank
        self.generators = [(str(name), int(deg)) for name, deg in generators]
        names = [name for name, _ in self.generators]
        if len(set(names)) != len(names):
            raise InputError("Generator names must be unique")
        self._degree = dict(self.generators)
        for name, deg in self.generators:
            if deg < 0:
                raise InputError(f"Generator {name} has negative degree")
        self.relations = [self._checked(r, "relation") for r in relations]
        self.products: Dict[Tuple[str, str], Element] = {}
        for (left, right), value in (products or {}).items():
            if left not in self._degree or right not in self._degree:
                raise InputError(f"Product ({left}, {right}) refers to an unknown generator")
            element = self._checked(value, f"product ({left}, {right})")
            degree = self.degree_of(element)
            if degree is not None and degree != self._degree[left] + self._degree[right]:
                raise InputError(f"Product ({left}, {right}) is not homogeneous of the right degree")
            self.products[(left, right)] = element
        self.unit = self._checked(unit or {}, "unit")
        if self.generators and self.degree_of(self.unit) not in (0, None):
            raise InputError("The unit must lie in degree 0")
        self._components: Dict[int, Tuple[List[Tuple[Exponent, str]], Dict[Tuple[Exponent, str], int], QuotientSpace]] = {}

    def _checked(self, element: Element, what: str) -> Element:
        out: Element = {}
        for (exponent, name), c in element.items():
            if name not in self._degree:
                raise InputError(f"{what} uses unknown generator {name!r}")
            if len(exponent) != self.rank or any(e < 0 for e in exponent):
                raise InputError(f"{what} has an exponent {exponent} not in {self.rank} variables")
            if c != 0:
                out[(tuple(exponent), name)] = out.get((tuple(exponent), name), Fraction(0)) + Fraction(c)
        self.degree_of(out)
        return {k: v for k, v in out.items() if v != 0}

    def term_degree(self, key: Tuple[Exponent, str]) -> int:
        return 2 * sum(key[0]) + self._degree[key[1]]

    def degree_of(self, element: Element) -> Optional[int]:
        degrees = {self.term_degree(key) for key in element}
        if len(degrees) > 1:
            raise InputError("Element is not homogeneous")
        return degrees.pop() if degrees else None

    @property
    def single_unit(self) -> Optional[str]:
        if len(self.unit) == 1:
            (exponent, name), c = next(iter(self.unit.items()))
            if c == 1 and not any(exponent):
                return name
        return None

    def generator_product(self, left: str, right: str) -> Element:
        if (left, right) in self.products:
            return self.products[(left, right)]
        if (right, left) in self.products:
            sign = -1 if self._degree[left] % 2 and self._degree[right] % 2 else 1
            return {key: sign * c for key, c in self.products[(right, left)].items()}
        unit = self.single_unit
        if unit == left:
            return {((0,) * self.rank, right): Fraction(1)}
        if unit == right:
            return {((0,) * self.rank, left): Fraction(1)}
        return {}

    def multiply(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for (ea, ga), ca in x.items():
            for (eb, gb), cb in y.items():
                for (ec, gc), cc in self.generator_product(ga, gb).items():
                    key = (tuple(a + b + c for a, b, c in zip(ea, eb, ec)), gc)
                    out[key] = out.get(key, Fraction(0)) + ca * cb * cc
        return {k: v for k, v in out.items() if v != 0}

    def scale(self, poly: HomogeneousPoly, x: Element) -> Element:
        """Module action of a polynomial in the variables."""
        out: Element = {}
        for exponent, c in poly.terms:
            for (e, g), value in x.items():
                key = (tuple(a + b for a, b in zip(exponent, e)), g)
                out[key] = out.get(key, Fraction(0)) + c * value
        return {k: v for k, v in out.items() if v != 0}

    def _component(self, k: int):
        if k not in self._components:
            basis = []
            for name, deg in self.generators:
                if k >= deg and (k - deg) % 2 == 0:
                    for exponent in monomial_basis(self.rank, (k - deg) // 2):
                        basis.append((exponent, name))
            index = {key: i for i, key in enumerate(basis)}
            spanning = []
            for relation in self.relations:
                degree = self.degree_of(relation)
                if degree is None or degree > k or (k - degree) % 2:
                    continue
                for exponent in monomial_basis(self.rank, (k - degree) // 2):
                    shifted = self.scale(HomogeneousPoly.from_dict(self.rank, (k - degree) // 2, {exponent: 1}), relation)
                    spanning.append(self._vector(shifted, index))
            dim = len(basis)
            sub = span_basis(spanning, dim) if spanning else []
            units = [unit_vector(dim, i) for i in range(dim)]
            chosen = complement(sub, units, dim) if units else []
            space = QuotientSpace(dim, sub, [units[i] for i in chosen])
            self._components[k] = (basis, index, space)
        return self._components[k]

    @staticmethod
    def _vector(x: Element, index: Mapping[Tuple[Exponent, str], int]) -> Vector:
        vector = [Fraction(0)] * len(index)
        for key, c in x.items():
            if key not in index:
                raise InputError("Element does not lie in the requested degree")
            vector[index[key]] = c
        return tuple(vector)

    def dimension(self, k: int) -> int:
        return self._component(k)[2].dimension

    def coordinates(self, x: Element, k: int) -> Vector:
        basis, index, space = self._component(k)
        return space.coordinates([self._vector(x, index)])[0]

    def basis_elements(self, k: int) -> List[Element]:
        basis, _, space = self._component(k)
        return [{basis[i]: c for i, c in enumerate(rep) if c != 0} for rep in space.reps]

    def is_zero(self, x: Element, k: int) -> bool:
        return all(c == 0 for c in self.coordinates(x, k))

    def format(self, x: Element) -> str:
        if not x:
            return "0"
        pieces = []
        for (exponent, name), c in sorted(x.items(), key=lambda item: (item[0][1], item[0][0])):
            factors = [f"y{a + 1}" if e == 1 else f"y{a + 1}^{e}" for a, e in enumerate(exponent) if e]
            monomial = "*".join(factors + [name])
            magnitude = abs(c)
            text = monomial if magnitude == 1 else f"{format_fraction(magnitude)}*{monomial}"
            pieces.append(("-" if c < 0 else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def base_change(self, images: Sequence[HomogeneousPoly], rank: int) -> "GradedAlgebraPresentation":
        """Q[V'] ⊗_{Q[V]} A for variable images given as linear polynomials in `rank` variables."""
        return GradedAlgebraPresentation(
            rank,
            self.generators,
            [substitute_element(r, images, rank) for r in self.relations],
            {key: substitute_element(value, images, rank) for key, value in self.products.items()},
            substitute_element(self.unit, images, rank),
        )

    def to_dict(self) -> Dict[str, Any]:
        """Input-file form: generators, relations, products and unit as term lists."""
        return {
            "generators": [{"name": name, "deg": deg} for name, deg in self.generators],
            "relations": [element_terms(r) for r in self.relations],
            "products": [
                {"l": left, "r": right, "value": element_terms(value)}
                for (left, right), value in self.products.items()
            ],
            "unit": element_terms(self.unit),
        }


def element_terms(x: Element) -> List[Dict[str, Any]]:
    return [
        {"gen": name, "coef": format_fraction(c), "exp": list(exponent)}
        for (exponent, name), c in sorted(x.items(), key=lambda item: (item[0][1], item[0][0]))
    ]


def substitute_element(x: Element, images: Sequence[HomogeneousPoly], rank: int) -> Element:
    out: Element = {}
    for (exponent, name), c in x.items():
        poly = HomogeneousPoly.from_dict(len(exponent), sum(exponent), {exponent: c}).substitute(images, rank)
        for e, value in poly.terms:
            key = (e, name)
            out[key] = out.get(key, Fraction(0)) + value
    return {k: v for k, v in out.items() if v != 0}


@dataclass
class CriterionData:
    n: int
    subspaces: List[List[Vector]]
    algebras: List[GradedAlgebraPresentation]
    maps: Dict[Tuple[int, int], Dict[str, Element]]
    tests: Optional[List[List[Vector]]] = None

    def __post_init__(self) -> None:
        if len(self.subspaces) != len(self.algebras):
            raise InputError("Every subspace needs an algebra")
        if not self.subspaces:
            raise InputError("Criterion data needs at least one subspace")
        for i, basis in enumerate(self.subspaces):
            for v in basis:
                if len(v) != self.n:
                    raise InputError(f"Subspace V{i} has a vector of length {len(v)}, expected {self.n}")
            if basis and span_rank(basis, self.n) != len(basis):
                raise InputError(f"Basis of V{i} is not linearly independent")
            if self.algebras[i].rank != len(basis):
                raise InputError(f"Algebra A{i} has {self.algebras[i].rank} variables, V{i} has dimension {len(basis)}")
        if len(self.subspaces[0]) != self.n:
            raise InputError("V0 must be the full space")
        if not any(not basis for basis in self.subspaces):
            raise InputError("The zero subspace is missing")
        self._changed: Dict[Tuple[int, int], GradedAlgebraPresentation] = {}
        for (i, j), images in self.maps.items():
            if not (0 <= i < len(self.subspaces) and 0 <= j < len(self.subspaces)):
                raise InputError(f"Map f{i}{j} refers to a missing algebra")
            if i == j:
                raise InputError(f"Map f{i}{i} is the identity and must not be given")
            if not self.contained(j, i):
                raise InputError(f"Map f{i}{j} needs V{j} ⊆ V{i}")
            unknown = set(images) - {name for name, _ in self.algebras[i].generators}
            if unknown:
                raise InputError(f"Map f{i}{j} has images for unknown generators {sorted(unknown)}")
            degrees = dict(self.algebras[i].generators)
            target = self.changed(i, j)
            for name, image in images.items():
                checked = target._checked(image, f"image of {name} under f{i}{j}")
                if target.degree_of(checked) not in (None, degrees[name]):
                    raise InputError(f"Map f{i}{j} does not preserve the degree of {name}")
                images[name] = checked
        for j in range(1, len(self.subspaces)):
            if (0, j) not in self.maps:
                raise InputError(f"Map f0{j} is missing")

    def to_dict(self) -> Dict[str, Any]:
        """Input-file form of the data."""
        data: Dict[str, Any] = {
            "n": self.n,
            "subspaces": [[[format_fraction(c) for c in v] for v in basis] for basis in self.subspaces],
            "algebras": [algebra.to_dict() for algebra in self.algebras],
            "maps": [
                {
                    "source": i,
                    "target": j,
                    "images": {name: element_terms(image) for name, image in sorted(images.items())},
                }
                for (i, j), images in sorted(self.maps.items())
            ],
        }
        if self.tests is not None:
            data["tests"] = [[[format_fraction(c) for c in v] for v in basis] for basis in self.tests]
        return data

    def contained(self, j: int, i: int) -> bool:
        """V_j ⊆ V_i."""
        first, second = self.subspaces[j], self.subspaces[i]
        if not first:
            return True
        return span_rank(list(second) + list(first), self.n) == len(second)

    def inclusion_images(self, j: int, i: int) -> List[HomogeneousPoly]:
        """Basis vectors of V_j as linear polynomials in the coordinates of V_i."""
        target = self.subspaces[i]
        rank = len(target)
        out = []
        if not self.subspaces[j]:
            return out
        solutions = solve_many(SparseMatrix.from_columns(target, self.n), list(self.subspaces[j]))
        for solution in solutions:
            if solution is None:
                raise InputError(f"V{j} is not contained in V{i}")
            out.append(HomogeneousPoly.from_dict(rank, 1, {
                tuple(1 if a == b else 0 for b in range(rank)): c for a, c in enumerate(solution)
            }))
        return out

    def changed(self, i: int, j: int) -> GradedAlgebraPresentation:
        """Q[V_i] ⊗_{Q[V_j]} A_j."""
        if i == j:
            return self.algebras[i]
        if (i, j) not in self._changed:
            self._changed[(i, j)] = self.algebras[j].base_change(
                self.inclusion_images(j, i), len(self.subspaces[i])
            )
        return self._changed[(i, j)]

    def apply(self, i: int, j: int, x: Element) -> Element:
        """f_ij on an element of A_i, extended Q[V_i]-linearly."""
        if i == j:
            return dict(x)
        images = self.maps[(i, j)]
        target = self.changed(i, j)
        out: Element = {}
        for (exponent, name), c in x.items():
            image = images.get(name, {})
            poly = HomogeneousPoly.from_dict(len(exponent), sum(exponent), {exponent: c})
            out = _add(out, target.scale(poly, image))
        return out


@dataclass
class AlgebraConditions:
    index: int
    spacelike: bool
    spacelike_witness: Optional[str]
    a1_zero: bool
    injective: bool
    issues: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.spacelike and self.a1_zero and self.injective and not self.issues

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "algebra": f"A{self.index}",
            "spacelike": self.spacelike,
            "a1_zero": self.a1_zero,
            "injective_v_a0_a2": self.injective,
            "finitely_generated": True,
        }
        if self.spacelike_witness is not None:
            data["spacelike_witness"] = self.spacelike_witness
        if self.issues:
            data["issues"] = list(self.issues)
        return data


@dataclass
class CriterionReport:
    degree_bound: int
    sum_closure_failures: List[str]
    algebras: List[AlgebraConditions]
    cocycle_failures: List[str]
    localization: List[ConditionVerdict]

    @property
    def condition_i(self) -> ItemStatus:
        return ItemStatus.FAIL if self.sum_closure_failures else ItemStatus.PASS

    @property
    def condition_ii(self) -> ItemStatus:
        return ItemStatus.PASS if all(a.passed for a in self.algebras) else ItemStatus.FAIL

    @property
    def condition_iii(self) -> ItemStatus:
        if self.cocycle_failures:
            return ItemStatus.FAIL
        if any(not v.verified for v in self.localization):
            return ItemStatus.INCONCLUSIVE
        return ItemStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree_bound": self.degree_bound,
            "conditions": {
                "sum_closure": self.condition_i.value,
                "algebras": self.condition_ii.value,
                "localization": self.condition_iii.value,
            },
            "sum_closure_failures": list(self.sum_closure_failures),
            "algebras": [a.to_dict() for a in self.algebras],
            "cocycle_failures": list(self.cocycle_failures),
            "localization": [v.to_dict() for v in self.localization],
        }


def _sum_closure(data: CriterionData) -> List[str]:
    failures = []
    count = len(data.subspaces)
    for i in range(count):
        for j in range(i + 1, count):
            total = span_basis(list(data.subspaces[i]) + list(data.subspaces[j]), data.n)
            present = any(
                len(data.subspaces[l]) == len(total)
                and span_rank(list(total) + list(data.subspaces[l]), data.n) == len(total)
                for l in range(count)
            )
            if not present:
                failures.append(f"V{i} + V{j} is not in the list")
    return failures


def _algebra_conditions(data: CriterionData, i: int) -> AlgebraConditions:
    algebra = data.algebras[i]
    issues: List[str] = []
    a0 = algebra.basis_elements(0)
    structure = []
    for a in a0:
        structure.append(tuple(algebra.coordinates(algebra.multiply(a, b), 0) for b in a0))
    unit = algebra.coordinates(algebra.unit, 0) if a0 else ()
    finite = FiniteCommAlgebra(tuple(f"e{k}" for k in range(len(a0))), tuple(structure), tuple(unit))
    spacelike, witness = False, None
    try:
        split = split_semisimple_test(finite)
        spacelike, witness = split.is_split, split.witness
    except InputError as exc:
        issues.append(f"A{i}^0 is not a valid algebra: {exc}")
    products = []
    for a in range(algebra.rank):
        variable = HomogeneousPoly.variable(algebra.rank, a)
        for e in a0:
            products.append(algebra.coordinates(algebra.scale(variable, e), 2))
    dim2 = algebra.dimension(2)
    injective = (span_rank(products, dim2) if products and dim2 else 0) == algebra.rank * len(a0)
    return AlgebraConditions(i, spacelike, witness, algebra.dimension(1) == 0, injective, issues)


def _cocycle_failures(data: CriterionData) -> List[str]:
    failures = []
    for (i, j) in sorted(data.maps):
        for (j2, l) in sorted(data.maps):
            if j2 != j or (i, l) not in data.maps:
                continue
            target = data.changed(i, l)
            inner = data.changed(j, l)
            images = data.inclusion_images(j, i)
            rank = len(data.subspaces[i])
            for name, degree in data.algebras[i].generators:
                first = data.apply(i, j, {((0,) * data.algebras[i].rank, name): Fraction(1)})
                composed: Element = {}
                for (exponent, middle), c in first.items():
                    poly = HomogeneousPoly.from_dict(rank, sum(exponent), {exponent: c})
                    pushed = data.apply(j, l, {((0,) * inner.rank, middle): Fraction(1)})
                    composed = _add(composed, target.scale(poly, substitute_element(pushed, images, rank)))
                direct = data.apply(i, l, {((0,) * data.algebras[i].rank, name): Fraction(1)})
                difference = _add(composed, direct, Fraction(-1))
                if difference and not target.is_zero(difference, degree):
                    failures.append(f"(id ⊗ f{j}{l}) ∘ f{i}{j} differs from f{i}{l} on {name}")
    return failures


def _localization(
    data: CriterionData, W: List[Vector], label: str, degree_bound: int, policy: AnnihilatorPolicy
) -> ConditionVerdict:
    n = data.n
    contained = [j for j in range(len(data.subspaces)) if span_rank(list(W) + list(data.subspaces[j]), n) == span_rank(W, n)]
    j = max(contained, key=lambda idx: (len(data.subspaces[idx]), -idx))
    details: Dict[str, Any] = {"subspace": f"V{j}"}
    if j == 0:
        return ConditionVerdict("localization", label, VerdictKind.VERIFIED, degree_bound, details=details)
    source = data.algebras[0]
    target = data.changed(0, j)
    pending: List[PendingClass] = []
    image_cache: Dict[int, List[Vector]] = {}

    def image_columns(k: int) -> List[Vector]:
        if k not in image_cache:
            image_cache[k] = [target.coordinates(data.apply(0, j, e), k) for e in source.basis_elements(k)]
        return image_cache[k]

    kernel_dims, cokernel_dims = [], []
    for k in range(degree_bound + 1):
        columns = image_columns(k)
        dim = target.dimension(k)
        kernel = kernel_basis(SparseMatrix.from_columns(columns, dim)) if columns else []
        elements = source.basis_elements(k)
        for vector in kernel:
            element: Element = {}
            for c, e in zip(vector, elements):
                element = _add(element, e, c)
            pending.append(PendingClass(k, "kernel", source.format(element), element))
        units = [unit_vector(dim, m) for m in range(dim)]
        missing = complement(columns, units, dim) if units else []
        target_elements = target.basis_elements(k)
        for m in missing:
            pending.append(PendingClass(k, "cokernel", target.format(target_elements[m]), target_elements[m]))
        kernel_dims.append(len(kernel))
        cokernel_dims.append(len(missing))

    forms = candidate_forms(list(data.subspaces[0]), W, [], policy, n)
    coordinates = solve_many(SparseMatrix.from_columns(data.subspaces[0], n), forms.forms) if forms.forms else []
    rank = len(data.subspaces[0])
    polys = []
    for solution in coordinates:
        if solution is None:
            raise InvariantViolation("Form outside the full space")
        polys.append(HomogeneousPoly.from_dict(
            rank, 1, {tuple(1 if a == b else 0 for b in range(rank)): c for a, c in enumerate(solution)}
        ))

    def annihilates(item: PendingClass, multiplier: Multiplier) -> bool:
        m = item.degree + 2 * multiplier_degree(multiplier)
        algebra = source if item.side == "kernel" else target
        product = item.payload
        for index, exponent in multiplier:
            product = algebra.scale(polys[index].power(exponent), product)
        if item.side == "kernel":
            return source.is_zero(product, m)
        coordinates_m = target.coordinates(product, m)
        if all(c == 0 for c in coordinates_m):
            return True
        image = image_columns(m)
        return bool(image) and span_rank(image + [coordinates_m], len(coordinates_m)) == span_rank(
            image, len(coordinates_m)
        )

    power_bound = policy.resolved_power_bound(degree_bound)
    if forms.forms:
        outcome = annihilator_search(pending, forms, power_bound, annihilates)
        survivors = tuple(outcome.survivors)
        attempts = outcome.attempts
    else:
        survivors = tuple(Survivor(p.degree, p.side, p.representative) for p in pending)
        attempts = 0
    details.update({"kernel_dims": kernel_dims, "cokernel_dims": cokernel_dims, "attempts": attempts})
    kind = VerdictKind.INCONCLUSIVE if survivors else VerdictKind.VERIFIED
    return ConditionVerdict("localization", label, kind, degree_bound, survivors=survivors, details=details)


def check_criterion(
    data: CriterionData, degree_bound: int, policy: Optional[AnnihilatorPolicy] = None
) -> CriterionReport:
    """Sum-closure, per-algebra hypotheses, cocycle identities and localization tests."""
    policy = policy or AnnihilatorPolicy()
    sum_failures = _sum_closure(data)
    algebras = [_algebra_conditions(data, i) for i in range(len(data.algebras))]
    cocycles = _cocycle_failures(data)
    tests = data.tests if data.tests is not None else [list(basis) for basis in data.subspaces]
    localization = []
    for index, W in enumerate(tests):
        label = f"W{index}" if data.tests is not None else f"W=V{index}"
        localization.append(_localization(data, list(W), label, degree_bound, policy))
    report = CriterionReport(degree_bound, sum_failures, algebras, cocycles, localization)
    logger.info(
        "Criterion checked",
        extra={
            "sum_closure": report.condition_i.value,
            "algebras": report.condition_ii.value,
            "localization": report.condition_iii.value,
        },
    )
    return report


def criterion_data_for_circle_algebra(algebra: CircleAlgebra) -> CriterionData:
    """Two-entry data V0 = <x>, V1 = 0 with A1 the localized degree-zero algebra."""
    generators = [(g.name, g.degree) for g in algebra.generators]
    relations = [{((g.order,), g.name): Fraction(1)} for g in algebra.torsion_gens]
    products: Dict[Tuple[str, str], Element] = {}
    names = [g.name for g in algebra.generators]
    for a, left in enumerate(names):
        for right in names[a:]:
            products[(left, right)] = {((p,), name): c for (p, name), c in algebra.product(left, right).items()}
    unit = {((0,), name): c for name, c in algebra.unit}
    A0 = GradedAlgebraPresentation(1, generators, relations, products, unit)

    localized: FiniteCommAlgebra = localized_degree_zero(algebra)
    local_products: Dict[Tuple[str, str], Element] = {}
    for a, left in enumerate(localized.names):
        for b in range(a, localized.dimension):
            local_products[(left, localized.names[b])] = {
                ((), localized.names[k]): c for k, c in enumerate(localized.structure[a][b]) if c != 0
            }
    local_unit = {((), name): c for name, c in zip(localized.names, localized.unit) if c != 0}
    A1 = GradedAlgebraPresentation(
        0, [(name, 0) for name in localized.names], (), local_products, local_unit
    )

    images: Dict[str, Element] = {}
    for g in algebra.free_gens:
        images[g.name] = {((g.degree // 2,), localized_name(g)): Fraction(1)}
    return CriterionData(
        n=1,
        subspaces=[[(Fraction(1),)], []],
        algebras=[A0, A1],
        maps={(0, 1): images},
    )
