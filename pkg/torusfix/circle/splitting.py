"""
Split-semisimplicity test for finite commutative Q-algebras.

Reducedness is read off the trace form. A reduced algebra is then cut into blocks
with idempotents built from rational roots of minimal polynomials; an irreducible
factor of degree > 1 proves that some block is a proper field extension of Q.
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
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Poly, QQ, Rational, Symbol

from ..core.linalg import (
    QuotientSpace,
    SparseMatrix,
    Vector,
    add_vectors,
    format_fraction,
    kernel_basis,
    scale_vector,
    solve_many,
    span_basis,
)
from ..errors import InputError, InvariantViolation
from .algebra import FiniteCommAlgebra

logger = logging.getLogger(__name__)

_T = Symbol("t")


class SplitKind(Enum):
    SPLIT_SEMISIMPLE = "split-semisimple"
    NILPOTENTS = "nilpotents"
    FIELD_EXTENSION = "field-extension"


@dataclass(frozen=True)
class SplitResult:
    kind: SplitKind
    rank: int = 0
    idempotents: Tuple[Vector, ...] = ()
    witness: Optional[str] = None
    witness_vector: Optional[Vector] = None

    @property
    def is_split(self) -> bool:
        return self.kind is SplitKind.SPLIT_SEMISIMPLE

    def to_dict(self, algebra: Optional[FiniteCommAlgebra] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.kind.value}
        if self.is_split:
            data["rank"] = self.rank
            if algebra is not None:
                data["idempotents"] = [algebra.format_element(e) for e in self.idempotents]
        else:
            data["witness"] = self.witness
        return data


def format_univariate(coefficients: Sequence[Fraction], variable: str = "t") -> str:
    """Render a polynomial given highest coefficient first, e.g. "t^2 - 2"."""
    degree = len(coefficients) - 1
    pieces = []
    for position, c in enumerate(coefficients):
        if c == 0:
            continue
        power = degree - position
        magnitude = abs(c)
        if power == 0:
            text = format_fraction(magnitude)
        else:
            monomial = variable if power == 1 else f"{variable}^{power}"
            text = monomial if magnitude == 1 else f"{format_fraction(magnitude)}*{monomial}"
        pieces.append(("-" if c < 0 else "+", text))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def trace_form(algebra: FiniteCommAlgebra) -> SparseMatrix:
    """Gram matrix of (u, v) ↦ tr(L_{uv}) on the basis."""
    r = algebra.dimension
    traces = [sum((algebra.structure[k][m][m] for m in range(r)), Fraction(0)) for k in range(r)]
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            row.append(sum((c * t for c, t in zip(algebra.structure[i][j], traces)), Fraction(0)))
        rows.append(row)
    return SparseMatrix.from_rows(rows, r)


def _matmul(a: List[List[Fraction]], b: List[List[Fraction]]) -> List[List[Fraction]]:
    size = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(size)), Fraction(0)) for j in range(size)]
        for i in range(size)
    ]


def minimal_polynomial(matrix: SparseMatrix) -> List[Fraction]:
    """Monic minimal polynomial of a square matrix, highest coefficient first."""
    size = matrix.rows
    identity = [[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)]
    dense = matrix.dense()
    powers = [identity]
    while True:
        current = _matmul(powers[-1], dense)
        flat_previous = [tuple(x for row in p for x in row) for p in powers]
        target = tuple(x for row in current for x in row)
        solution = solve_many(SparseMatrix.from_columns(flat_previous, size * size), [target])[0]
        if solution is not None:
            # t^k - Σ a_i t^i
            return [Fraction(1)] + [-solution[i] for i in range(len(powers) - 1, -1, -1)]
        powers.append(current)


def _factor(coefficients: Sequence[Fraction]) -> List[List[Fraction]]:
    """Monic irreducible factors over Q, highest coefficient first."""
    poly = Poly([Rational(c.numerator, c.denominator) for c in coefficients], _T, domain=QQ)
    factors = []
    for factor, _ in poly.factor_list()[1]:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in factor.all_coeffs()]
        lead = coeffs[0]
        factors.append([c / lead for c in coeffs])
    factors.sort(key=lambda f: (len(f), [abs(c) for c in f], f))
    return factors


def _evaluate(coefficients: Sequence[Fraction], value: Fraction) -> Fraction:
    result = Fraction(0)
    for c in coefficients:
        result = result * value + c
    return result


def _divide_linear(coefficients: Sequence[Fraction], root: Fraction) -> List[Fraction]:
    """Quotient of the polynomial by (t - root)."""
    quotient = []
    carry = Fraction(0)
    for c in coefficients[:-1]:
        carry = carry * root + c
        quotient.append(carry)
    return quotient


class _Block:
    def __init__(self, algebra: FiniteCommAlgebra, idempotent: Vector):
        self.idempotent = idempotent
        r = algebra.dimension
        spanning = [algebra.multiply(idempotent, algebra.basis_vector(i)) for i in range(r)]
        self.basis = span_basis(spanning, r)
        self.space = QuotientSpace(r, [], self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def restricted_matrix(self, algebra: FiniteCommAlgebra, u: Vector) -> SparseMatrix:
        images = [algebra.multiply(u, b) for b in self.basis]
        columns = self.space.coordinates(images)
        return SparseMatrix.from_columns(columns, self.dimension)

    def evaluate(self, algebra: FiniteCommAlgebra, coefficients: Sequence[Fraction], u: Vector) -> Vector:
        """coefficients(u) with the block idempotent as identity."""
        result = scale_vector(Fraction(0), self.idempotent)
        for c in coefficients:
            result = add_vectors(algebra.multiply(result, u), scale_vector(c, self.idempotent))
        return result


def split_semisimple_test(algebra: FiniteCommAlgebra) -> SplitResult:
    """Decide whether the algebra is isomorphic to Q × ... × Q."""
    issues = algebra.validate()
    if issues:
        raise InputError("Invalid finite algebra: " + "; ".join(issues))
    r = algebra.dimension
    if r == 0:
        return SplitResult(SplitKind.SPLIT_SEMISIMPLE, 0, ())

    radical = kernel_basis(trace_form(algebra))
    if radical:
        witness = radical[0]
        logger.info("Trace form is degenerate", extra={"radical_dimension": len(radical)})
        return SplitResult(
            SplitKind.NILPOTENTS, witness=algebra.format_element(witness), witness_vector=witness
        )

    finished: List[Vector] = []
    pending = [_Block(algebra, algebra.unit)]
    while pending:
        block = pending.pop(0)
        if block.dimension == 1:
            finished.append(block.idempotent)
            continue
        split = False
        for i in range(r):
            u = algebra.multiply(block.idempotent, algebra.basis_vector(i))
            polynomial = minimal_polynomial(block.restricted_matrix(algebra, u))
            factors = _factor(polynomial)
            nonlinear = [f for f in factors if len(f) > 2]
            if nonlinear:
                witness = format_univariate(nonlinear[0])
                logger.info("Minimal polynomial has an irreducible factor", extra={"factor": witness})
                return SplitResult(SplitKind.FIELD_EXTENSION, witness=witness, witness_vector=u)
            if len(factors) < 2:
                continue
            roots = sorted((-f[1] for f in factors), key=lambda v: (abs(v), v))
            root = roots[0]
            cofactor = _divide_linear(polynomial, root)
            scale = _evaluate(cofactor, root)
            first = scale_vector(1 / scale, block.evaluate(algebra, cofactor, u))
            second = add_vectors(block.idempotent, scale_vector(Fraction(-1), first))
            pending.extend([_Block(algebra, first), _Block(algebra, second)])
            split = True
            break
        if not split:
            raise InvariantViolation("Reduced block of dimension > 1 admits no splitting element")

    if len(finished) != r:
        raise InvariantViolation(f"Splitting produced {len(finished)} blocks for dimension {r}")
    finished.sort(key=lambda e: tuple(-abs(c) for c in e) + tuple(e))
    return SplitResult(SplitKind.SPLIT_SEMISIMPLE, r, tuple(finished))
