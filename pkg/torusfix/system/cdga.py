"""
Free graded-commutative cochain algebras and their degreewise cohomology.

A presentation is a finite product of factors Λ(generators) with a differential
given on generators. Odd generators square to zero and anticommute; monomials are
exponent tuples in generator order and every product is re-sorted with its Koszul
sign. Expressions such as "b^2 - x1*x2*x3*b" are parsed with sympy using
noncommutative symbols, so the written factor order determines the sign.
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
from fractions import Fraction
from tokenize import TokenError
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Add, Pow, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ..core.linalg import (
    QuotientSpace,
    SparseMatrix,
    Vector,
    format_fraction,
    kernel_basis,
    quotient_of,
    solve_many,
)
from ..errors import InputError, InvariantViolation

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Cochain = Dict[Monomial, Fraction]
ProductCochain = Tuple[Cochain, ...]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass(frozen=True)
class CdgaGenerator:
    name: str
    degree: int

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


def add_cochains(x: Cochain, y: Cochain, scale: Fraction = Fraction(1)) -> Cochain:
    out = dict(x)
    for m, c in y.items():
        value = out.get(m, Fraction(0)) + scale * c
        if value == 0:
            out.pop(m, None)
        else:
            out[m] = value
    return out


class CdgaFactor:
    """One connected factor Λ(generators), d."""

    def __init__(self, generators: Sequence[CdgaGenerator], differential: Mapping[str, Any]):
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InputError("Generator names in a factor must be unique")
        for g in self.generators:
            if g.degree < 1:
                raise InputError(f"Generator {g.name} has degree {g.degree}; degrees must be >= 1")
            if not g.name.isidentifier():
                raise InputError(f"Generator name {g.name!r} is not an identifier")
        self._index = {name: i for i, name in enumerate(names)}
        self._odd = tuple(g.odd for g in self.generators)
        self._symbols = {name: Symbol(name, commutative=False) for name in names}
        unknown = set(differential) - set(names)
        if unknown:
            raise InputError(f"Differential given for unknown generators {sorted(unknown)}")
        self._d: Dict[str, Cochain] = {}
        for name in names:
            value = differential.get(name, "0")
            self._d[name] = self.parse(value) if isinstance(value, str) else dict(value)
        self._basis: Dict[int, List[Monomial]] = {}
        self._positions: Dict[int, Dict[Monomial, int]] = {}
        self._d_cache: Dict[Monomial, Cochain] = {}
        self._d_matrix: Dict[int, SparseMatrix] = {}
        self._cohomology: Dict[int, "FactorCohomology"] = {}

    @property
    def size(self) -> int:
        return len(self.generators)

    def generator_monomial(self, name: str) -> Monomial:
        if name not in self._index:
            raise InputError(f"Unknown generator {name!r}")
        i = self._index[name]
        return tuple(1 if j == i else 0 for j in range(self.size))

    def unit(self) -> Cochain:
        return {(0,) * self.size: Fraction(1)}

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(m, self.generators))

    def degree_of(self, x: Cochain) -> Optional[int]:
        """Common degree of the terms, None for zero; raises when inhomogeneous."""
        degrees = {self.monomial_degree(m) for m in x}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise InputError(f"Cochain {self.format(x)} is not homogeneous")
        return degrees.pop()

    def differential(self, name: str) -> Cochain:
        return self._d[name]

    # -- parsing -----------------------------------------------------------------

    def parse(self, expression: str) -> Cochain:
        """Parse a polynomial in the generators, keeping the written factor order."""
        try:
            expr = parse_expr(expression, local_dict=dict(self._symbols), transformations=_TRANSFORMATIONS)
        except (SympifyError, SyntaxError, TypeError, TokenError) as exc:
            raise InputError(f"Cannot parse expression {expression!r}: {exc}") from exc
        unknown = {str(s) for s in expr.free_symbols} - set(self._symbols)
        if unknown:
            raise InputError(f"Expression {expression!r} uses unknown generators {sorted(unknown)}")
        result: Cochain = {}
        for term in Add.make_args(expr.expand()):
            commutative, ordered = term.args_cnc()
            coefficient = Fraction(1)
            for factor in commutative:
                if not factor.is_Rational:
                    raise InputError(f"Coefficient {factor} in {expression!r} is not rational")
                coefficient *= Fraction(int(factor.p), int(factor.q))
            if coefficient == 0:
                continue
            value: Cochain = {(0,) * self.size: coefficient}
            for factor in ordered:
                if isinstance(factor, Pow):
                    base, exponent = factor.args
                    if not exponent.is_Integer or exponent < 0:
                        raise InputError(f"Invalid exponent in {expression!r}")
                    power = int(exponent)
                else:
                    base, power = factor, 1
                name = str(base)
                if name not in self._index:
                    raise InputError(f"Unknown factor {name!r} in {expression!r}")
                for _ in range(power):
                    value = self.multiply(value, {self.generator_monomial(name): Fraction(1)})
            result = add_cochains(result, value)
        return result

    # -- arithmetic --------------------------------------------------------------

    def multiply_monomials(self, a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
        """(sign, a·b) after sorting, or None when an odd generator repeats."""
        exponents = []
        for i, (x, y) in enumerate(zip(a, b)):
            if self._odd[i] and x + y > 1:
                return None
            exponents.append(x + y)
        swaps = 0
        odd_in_a_after = 0
        for j in range(self.size - 1, -1, -1):
            if self._odd[j] and b[j]:
                swaps += odd_in_a_after
            if self._odd[j] and a[j]:
                odd_in_a_after += 1
        return (-1 if swaps % 2 else 1), tuple(exponents)

    def multiply(self, x: Cochain, y: Cochain) -> Cochain:
        out: Cochain = {}
        for a, ca in x.items():
            for b, cb in y.items():
                product = self.multiply_monomials(a, b)
                if product is None:
                    continue
                sign, m = product
                value = out.get(m, Fraction(0)) + sign * ca * cb
                if value == 0:
                    out.pop(m, None)
                else:
                    out[m] = value
        return out

    def _d_monomial(self, m: Monomial) -> Cochain:
        if m in self._d_cache:
            return self._d_cache[m]
        result: Cochain = {}
        prefix_degree = 0
        for i, e in enumerate(m):
            if e == 0:
                continue
            g = self.generators[i]
            lower = tuple(e - 1 if j == i else 0 for j in range(self.size))
            factor = Fraction(1) if g.odd else Fraction(e)
            piece = self.multiply({lower: factor}, self._d[g.name])
            prefix = tuple(m[j] if j < i else 0 for j in range(self.size))
            suffix = tuple(m[j] if j > i else 0 for j in range(self.size))
            term = self.multiply(self.multiply({prefix: Fraction(1)}, piece), {suffix: Fraction(1)})
            sign = Fraction(-1 if prefix_degree % 2 else 1)
            result = add_cochains(result, term, sign)
            prefix_degree += e * g.degree
        self._d_cache[m] = result
        return result

    def d(self, x: Cochain) -> Cochain:
        out: Cochain = {}
        for m, c in x.items():
            out = add_cochains(out, self._d_monomial(m), c)
        return out

    # -- degreewise linear algebra -----------------------------------------------

    def _enumerate(self, index: int, remaining: int) -> List[Monomial]:
        if index == self.size:
            return [()] if remaining == 0 else []
        g = self.generators[index]
        top = 1 if g.odd else remaining // g.degree
        out = []
        for e in range(min(top, remaining // g.degree), -1, -1):
            for rest in self._enumerate(index + 1, remaining - e * g.degree):
                out.append((e,) + rest)
        return out

    def basis(self, k: int) -> List[Monomial]:
        if k not in self._basis:
            self._basis[k] = self._enumerate(0, k) if k >= 0 else []
            self._positions[k] = {m: i for i, m in enumerate(self._basis[k])}
        return self._basis[k]

    def to_vector(self, x: Cochain, k: int) -> Vector:
        basis = self.basis(k)
        positions = self._positions[k]
        vector = [Fraction(0)] * len(basis)
        for m, c in x.items():
            if m not in positions:
                raise InputError(f"Cochain {self.format(x)} is not of degree {k}")
            vector[positions[m]] = c
        return tuple(vector)

    def from_vector(self, vector: Sequence[Fraction], k: int) -> Cochain:
        return {m: c for m, c in zip(self.basis(k), vector) if c != 0}

    def differential_matrix(self, k: int) -> SparseMatrix:
        """Matrix of d: C^k -> C^{k+1}."""
        if k not in self._d_matrix:
            source = self.basis(k)
            target = self.basis(k + 1)
            positions = self._positions[k + 1]
            entries = {}
            for j, m in enumerate(source):
                for image, c in self._d_monomial(m).items():
                    entries[(positions[image], j)] = c
            self._d_matrix[k] = SparseMatrix(len(target), len(source), entries)
        return self._d_matrix[k]

    def cohomology(self, k: int) -> "FactorCohomology":
        if k not in self._cohomology:
            dimension = len(self.basis(k))
            cycles = kernel_basis(self.differential_matrix(k))
            boundaries: List[Vector] = []
            if k >= 1:
                incoming = self.differential_matrix(k - 1)
                columns: Dict[int, List[Fraction]] = {}
                for (i, j), c in incoming.entries.items():
                    columns.setdefault(j, [Fraction(0)] * dimension)[i] = c
                boundaries = [tuple(col) for _, col in sorted(columns.items())]
            space = quotient_of(dimension, boundaries, cycles)
            boundary_rank = len(space.sub)
            if space.dimension != len(cycles) - boundary_rank:
                raise InvariantViolation(f"Cohomology bookkeeping failed in degree {k}")
            self._cohomology[k] = FactorCohomology(k, dimension, len(cycles), boundary_rank, space)
            logger.debug(
                "Factor cohomology computed",
                extra={"degree": k, "cochains": dimension, "dimension": space.dimension},
            )
        return self._cohomology[k]

    def validate(self) -> List[str]:
        issues = []
        for g in self.generators:
            dg = self._d[g.name]
            try:
                degree = self.degree_of(dg)
            except InputError:
                issues.append(f"d({g.name}) is not homogeneous")
                continue
            if degree is not None and degree != g.degree + 1:
                issues.append(f"d({g.name}) has degree {degree}, expected {g.degree + 1}")
                continue
            if self.d(dg):
                issues.append(f"d(d({g.name})) = {self.format(self.d(dg))} is not zero")
        return issues

    def format(self, x: Cochain) -> str:
        if not x:
            return "0"
        pieces = []
        for m in sorted(x, key=lambda mono: (self.monomial_degree(mono), [-e for e in mono])):
            c = x[m]
            factors = []
            for e, g in zip(m, self.generators):
                if e == 1:
                    factors.append(g.name)
                elif e > 1:
                    factors.append(f"{g.name}^{e}")
            monomial = "*".join(factors)
            magnitude = abs(c)
            if not monomial:
                text = format_fraction(magnitude)
            elif magnitude == 1:
                text = monomial
            else:
                text = f"{format_fraction(magnitude)}*{monomial}"
            pieces.append(("-" if c < 0 else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gens": [{"name": g.name, "deg": g.degree} for g in self.generators],
            "d": {g.name: self.format(self._d[g.name]) for g in self.generators if self._d[g.name]},
        }


@dataclass
class FactorCohomology:
    degree: int
    cochain_dimension: int
    cycle_dimension: int
    boundary_rank: int
    space: QuotientSpace

    @property
    def dimension(self) -> int:
        return self.space.dimension


class CohomologyDegree:
    """H^k of a product presentation: factor cohomologies side by side."""

    def __init__(self, degree: int, blocks: Sequence[FactorCohomology]):
        self.degree = degree
        self.blocks = list(blocks)
        self.offsets = []
        offset = 0
        for block in self.blocks:
            self.offsets.append(offset)
            offset += block.cochain_dimension
        self.cochain_dimension = offset

    @property
    def dimension(self) -> int:
        return sum(block.dimension for block in self.blocks)

    def representatives(self) -> List[Vector]:
        """Cocycle representatives of the basis, as product cochain vectors."""
        out = []
        for block, offset in zip(self.blocks, self.offsets):
            for rep in block.space.reps:
                vector = [Fraction(0)] * self.cochain_dimension
                vector[offset:offset + len(rep)] = rep
                out.append(tuple(vector))
        return out

    def try_coordinates(self, vectors: Sequence[Vector]) -> List[Optional[Vector]]:
        """Class coordinates of cocycles; None for non-cocycles."""
        per_block = []
        for block, offset in zip(self.blocks, self.offsets):
            pieces = [tuple(v[offset:offset + block.cochain_dimension]) for v in vectors]
            per_block.append(block.space.try_coordinates(pieces))
        out: List[Optional[Vector]] = []
        for index in range(len(vectors)):
            parts = [coords[index] for coords in per_block]
            if any(p is None for p in parts):
                out.append(None)
            else:
                out.append(tuple(c for p in parts for c in p))  # type: ignore[union-attr]
        return out

    def coordinates(self, vectors: Sequence[Vector]) -> List[Vector]:
        result = self.try_coordinates(vectors)
        if any(r is None for r in result):
            raise InputError(f"A vector in degree {self.degree} is not a cocycle")
        return result  # type: ignore[return-value]


class CdgaPresentation:
    """A finite product of factors; the empty product is the zero algebra."""

    def __init__(self, factors: Sequence[CdgaFactor]):
        self.factors = tuple(factors)
        self._cohomology: Dict[int, CohomologyDegree] = {}

    @classmethod
    def from_spec(cls, factors: Sequence[Mapping[str, Any]]) -> "CdgaPresentation":
        built = []
        for index, spec in enumerate(factors):
            try:
                generators = [CdgaGenerator(str(g["name"]), int(g["deg"])) for g in spec.get("gens", [])]
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"Factor {index} has malformed generators") from exc
            built.append(CdgaFactor(generators, spec.get("d", {})))
        return cls(built)

    @property
    def factor_count(self) -> int:
        return len(self.factors)

    def unit(self) -> ProductCochain:
        return tuple(f.unit() for f in self.factors)

    def zero(self) -> ProductCochain:
        return tuple({} for _ in self.factors)

    def parse(self, expression: Union[str, Sequence[str]]) -> ProductCochain:
        """A string applies to every factor; a list gives one expression per factor."""
        if isinstance(expression, str):
            return tuple(f.parse(expression) for f in self.factors)
        if len(expression) != len(self.factors):
            raise InputError(f"Expected {len(self.factors)} factor expressions, got {len(expression)}")
        return tuple(f.parse(e) for f, e in zip(self.factors, expression))

    def multiply(self, x: ProductCochain, y: ProductCochain) -> ProductCochain:
        return tuple(f.multiply(a, b) for f, a, b in zip(self.factors, x, y))

    def add(self, x: ProductCochain, y: ProductCochain, scale: Fraction = Fraction(1)) -> ProductCochain:
        return tuple(add_cochains(a, b, scale) for a, b in zip(x, y))

    def d(self, x: ProductCochain) -> ProductCochain:
        return tuple(f.d(a) for f, a in zip(self.factors, x))

    def basis_size(self, k: int) -> int:
        return sum(len(f.basis(k)) for f in self.factors)

    def basis_elements(self, k: int) -> List[ProductCochain]:
        out = []
        for index, factor in enumerate(self.factors):
            for m in factor.basis(k):
                out.append(tuple({m: Fraction(1)} if j == index else {} for j in range(len(self.factors))))
        return out

    def to_vector(self, x: ProductCochain, k: int) -> Vector:
        return tuple(c for f, a in zip(self.factors, x) for c in f.to_vector(a, k))

    def from_vector(self, vector: Sequence[Fraction], k: int) -> ProductCochain:
        out = []
        offset = 0
        for f in self.factors:
            size = len(f.basis(k))
            out.append(f.from_vector(vector[offset:offset + size], k))
            offset += size
        return tuple(out)

    def cohomology(self, k: int) -> CohomologyDegree:
        if k not in self._cohomology:
            self._cohomology[k] = CohomologyDegree(k, [f.cohomology(k) for f in self.factors])
        return self._cohomology[k]

    def cohomology_dimension(self, k: int) -> int:
        return self.cohomology(k).dimension

    def hilbert(self, D: int) -> List[int]:
        return [self.cohomology_dimension(k) for k in range(D + 1)]

    def class_coordinates(self, x: ProductCochain, k: int) -> Optional[Vector]:
        """Coordinates of the class of a cocycle of degree k, None for non-cocycles."""
        return self.cohomology(k).try_coordinates([self.to_vector(x, k)])[0]

    def is_coboundary(self, x: ProductCochain, k: int) -> bool:
        """Exactness by one solve per factor, without the full cohomology in degree k."""
        for factor, part in zip(self.factors, x):
            if not part:
                continue
            if k == 0:
                return False
            vector = factor.to_vector(part, k)
            if solve_many(factor.differential_matrix(k - 1), [vector])[0] is None:
                return False
        return True

    def is_exact(self, x: ProductCochain, k: int) -> bool:
        coords = self.class_coordinates(x, k)
        return coords is not None and all(c == 0 for c in coords)

    def validate(self) -> List[str]:
        issues = []
        for index, factor in enumerate(self.factors):
            issues.extend(f"factor {index}: {issue}" for issue in factor.validate())
        return issues

    def format(self, x: ProductCochain) -> str:
        if len(self.factors) == 1:
            return self.factors[0].format(x[0])
        return "(" + ", ".join(f.format(a) for f, a in zip(self.factors, x)) + ")"

    def to_dict(self) -> Dict[str, Any]:
        return {"factors": [f.to_dict() for f in self.factors]}
