"""
Homogeneous polynomials over the rationals in degree-two generators.

Monomials are exponent tuples listed in graded-lex order (x1 > x2 > ... within a
degree). A polynomial of degree d has cohomological degree 2d.
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

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..errors import InputError
from .linalg import Vector, format_fraction, to_fraction

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def _monomials(n: int, deg: int) -> Tuple[Exponent, ...]:
    if n == 0:
        return ((),) if deg == 0 else ()
    result = []
    for first in range(deg, -1, -1):
        for rest in _monomials(n - 1, deg - first):
            result.append((first,) + rest)
    return tuple(result)


def monomial_basis(n: int, deg: int) -> List[Exponent]:
    """All monomials of degree deg in n variables, graded-lex order."""
    if n < 0 or deg < 0:
        raise InputError(f"monomial_basis needs n >= 0 and deg >= 0, got n={n}, deg={deg}")
    return list(_monomials(n, deg))


@lru_cache(maxsize=None)
def monomial_index(n: int, deg: int) -> Dict[Exponent, int]:
    return {m: i for i, m in enumerate(_monomials(n, deg))}


@dataclass(frozen=True)
class HomogeneousPoly:
    """Sparse homogeneous polynomial; terms are kept sorted and nonzero."""

    n: int
    deg: int
    terms: Tuple[Tuple[Exponent, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, n: int, deg: int, coeffs: Mapping[Exponent, object]) -> "HomogeneousPoly":
        index = monomial_index(n, deg)
        cleaned = {}
        for exponent, value in coeffs.items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != n or any(e < 0 for e in exponent):
                raise InputError(f"Exponent {exponent} is not valid in {n} variables")
            if sum(exponent) != deg:
                raise InputError(f"Monomial {exponent} does not have degree {deg}")
            value = to_fraction(value)
            if value != 0:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + value
        ordered = sorted(
            ((m, c) for m, c in cleaned.items() if c != 0), key=lambda item: index[item[0]]
        )
        return cls(n, deg, tuple(ordered))

    @classmethod
    def zero(cls, n: int, deg: int) -> "HomogeneousPoly":
        return cls(n, deg, ())

    @classmethod
    def constant(cls, n: int, value: object = 1) -> "HomogeneousPoly":
        return cls.from_dict(n, 0, {(0,) * n: value})

    @classmethod
    def variable(cls, n: int, index: int) -> "HomogeneousPoly":
        exponent = tuple(1 if i == index else 0 for i in range(n))
        return cls.from_dict(n, 1, {exponent: 1})

    @classmethod
    def from_vector(cls, n: int, deg: int, vector: Sequence[Fraction]) -> "HomogeneousPoly":
        """Inverse of coefficient_vector."""
        return cls.from_dict(n, deg, dict(zip(_monomials(n, deg), vector)))

    def as_dict(self) -> Dict[Exponent, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_vector(self) -> Vector:
        """Coefficients over monomial_basis(n, deg)."""
        index = monomial_index(self.n, self.deg)
        vector = [Fraction(0)] * len(index)
        for exponent, value in self.terms:
            vector[index[exponent]] = value
        return tuple(vector)

    def _check_compatible(self, other: "HomogeneousPoly") -> None:
        if self.n != other.n:
            raise InputError(f"Polynomials in {self.n} and {other.n} variables cannot be combined")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compatible(other)
        if self.deg != other.deg and not (self.is_zero() or other.is_zero()):
            raise InputError(f"Cannot add polynomials of degrees {self.deg} and {other.deg}")
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        coeffs = self.as_dict()
        for exponent, value in other.terms:
            coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + value
        return HomogeneousPoly.from_dict(self.n, self.deg, coeffs)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.n, self.deg, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, value: object) -> "HomogeneousPoly":
        value = to_fraction(value)
        if value == 0:
            return HomogeneousPoly.zero(self.n, self.deg)
        return HomogeneousPoly(self.n, self.deg, tuple((m, c * value) for m, c in self.terms))

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return poly_mul(self, other)

    def power(self, exponent: int) -> "HomogeneousPoly":
        result = HomogeneousPoly.constant(self.n)
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    def substitute(self, images: Sequence["HomogeneousPoly"], n_new: int) -> "HomogeneousPoly":
        """Replace variable i by the linear polynomial images[i] (in n_new variables)."""
        if len(images) != self.n:
            raise InputError(f"Need {self.n} images, got {len(images)}")
        result = HomogeneousPoly.zero(n_new, self.deg)
        powers: Dict[Tuple[int, int], HomogeneousPoly] = {}
        for exponent, value in self.terms:
            term = HomogeneousPoly.constant(n_new, value)
            for i, e in enumerate(exponent):
                if e == 0:
                    continue
                if (i, e) not in powers:
                    powers[(i, e)] = images[i].power(e)
                term = poly_mul(term, powers[(i, e)])
            result = result + term
        return result

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for exponent, value in self.terms:
            product = value
            for x, e in zip(point, exponent):
                product *= Fraction(x) ** e
            total += product
        return total

    def __str__(self) -> str:
        return format_poly(self)


def poly_mul(p: HomogeneousPoly, q: HomogeneousPoly) -> HomogeneousPoly:
    """Product of homogeneous polynomials."""
    p._check_compatible(q)
    coeffs: Dict[Exponent, Fraction] = {}
    for mp, cp in p.terms:
        for mq, cq in q.terms:
            exponent = tuple(a + b for a, b in zip(mp, mq))
            coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + cp * cq
    return HomogeneousPoly.from_dict(p.n, p.deg + q.deg, coeffs)


@dataclass(frozen=True)
class LinearForm:
    """A degree-one polynomial, stored as its coefficient vector."""

    vector: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[object]) -> "LinearForm":
        return cls(tuple(to_fraction(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.vector)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.vector)

    def as_poly(self) -> HomogeneousPoly:
        coeffs = {}
        for i, value in enumerate(self.vector):
            exponent = tuple(1 if j == i else 0 for j in range(self.n))
            coeffs[exponent] = value
        return HomogeneousPoly.from_dict(self.n, 1, coeffs)


def hyperplane_parametrization(alpha: LinearForm) -> Tuple[int, List[HomogeneousPoly]]:
    """
    Substitution realising the hyperplane alpha = 0.

    Returns the eliminated variable j (last nonzero coefficient) and, for every
    variable, its image as a linear polynomial in the remaining n-1 variables.
    """
    if alpha.is_zero():
        raise InputError("Cannot restrict to the hyperplane of the zero form")
    n = alpha.n
    j = max(i for i, v in enumerate(alpha.vector) if v != 0)
    images = []
    for i in range(n):
        if i == j:
            coeffs = {}
            for k in range(n):
                if k == j or alpha.vector[k] == 0:
                    continue
                target = k if k < j else k - 1
                exponent = tuple(1 if t == target else 0 for t in range(n - 1))
                coeffs[exponent] = -alpha.vector[k] / alpha.vector[j]
            images.append(HomogeneousPoly.from_dict(n - 1, 1, coeffs))
        else:
            target = i if i < j else i - 1
            images.append(HomogeneousPoly.variable(n - 1, target))
    return j, images


def restrict_to_hyperplane(p: HomogeneousPoly, alpha: LinearForm) -> HomogeneousPoly:
    """Restriction of p to ker alpha, in n-1 variables; zero iff alpha divides p."""
    if alpha.n != p.n:
        raise InputError(f"Form in {alpha.n} variables applied to polynomial in {p.n}")
    _, images = hyperplane_parametrization(alpha)
    return p.substitute(images, p.n - 1)


def parse_poly_json(data: Mapping[str, object], n: int, deg: int) -> HomogeneousPoly:
    """Parse {"e1,e2,...": "p/q"}; the empty key is the constant monomial in zero variables."""
    coeffs = {}
    for key, value in data.items():
        key = key.strip()
        exponent = tuple(int(part) for part in key.split(",")) if key else ()
        coeffs[exponent] = value
    return HomogeneousPoly.from_dict(n, deg, coeffs)


def format_poly(p: HomogeneousPoly, names: Sequence[str] = ()) -> str:
    """Human readable rendering, e.g. "x1^2 - 2*x1*x2"."""
    if p.is_zero():
        return "0"
    if not names:
        names = [f"x{i + 1}" for i in range(p.n)]
    pieces = []
    for exponent, value in p.terms:
        factors = []
        for name, e in zip(names, exponent):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        monomial = "*".join(factors)
        magnitude = abs(value)
        if not monomial:
            text = format_fraction(magnitude)
        elif magnitude == 1:
            text = monomial
        else:
            text = f"{format_fraction(magnitude)}*{monomial}"
        pieces.append(("-" if value < 0 else "+", text))
    sign, text = pieces[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out
