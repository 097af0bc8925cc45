"""
Exact rational linear algebra.

Every elimination in torusfix goes through this module. Matrices are held sparsely
and handed to sympy's DomainMatrix over QQ for reduced row echelon form; all results
come back as tuples of Fraction.
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
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import InputError, InvariantViolation

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Convert an int, Fraction or exact "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"Not an exact rational: {value!r}") from exc
    raise InputError(f"Not a rational number: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as "p" or "p/q"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def zero_vector(dim: int) -> Vector:
    return (ZERO,) * dim


def unit_vector(dim: int, index: int) -> Vector:
    return tuple(ONE if i == index else ZERO for i in range(dim))


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class NoSolution:
    """Marker returned by solve when the system is inconsistent."""

    _instance: Optional["NoSolution"] = None

    def __new__(cls) -> "NoSolution":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NoSolution"

    def __bool__(self) -> bool:
        return False


NO_SOLUTION = NoSolution()


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse matrix over the rationals."""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError(f"Invalid matrix shape {self.rows}x{self.cols}")
        cleaned: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise InputError(f"Entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")
            value = to_fraction(value)
            if value != 0:
                cleaned[(i, j)] = value
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "SparseMatrix":
        """Build from dense rows; cols is required when there are no rows."""
        if cols is None:
            if not rows:
                raise InputError("Column count is required for a matrix without rows")
            cols = len(rows[0])
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise InputError(f"Row {i} has length {len(row)}, expected {cols}")
            for j, value in enumerate(row):
                if value != 0:
                    entries[(i, j)] = to_fraction(value)
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "SparseMatrix":
        """Build from dense columns, each of length rows."""
        entries = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise InputError(f"Column {j} has length {len(column)}, expected {rows}")
            for i, value in enumerate(column):
                if value != 0:
                    entries[(i, j)] = to_fraction(value)
        return cls(rows, len(columns), entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def dense(self) -> List[List[Fraction]]:
        data = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            data[i][j] = value
        return data

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise InputError(f"Vector of length {len(vector)} does not match {self.cols} columns")
        out = [ZERO] * self.rows
        for (i, j), value in self.entries.items():
            out[i] += value * vector[j]
        return tuple(out)


def _to_domain(matrix: SparseMatrix) -> DomainMatrix:
    rows: Dict[int, Dict[int, Any]] = {}
    for (i, j), value in matrix.entries.items():
        rows.setdefault(i, {})[j] = QQ(value.numerator, value.denominator)
    return DomainMatrix(rows, (matrix.rows, matrix.cols), QQ)


def _from_domain_element(element) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def rref(matrix: SparseMatrix) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form and the pivot columns."""
    if matrix.rows == 0 or matrix.cols == 0 or not matrix.entries:
        return [], ()
    reduced, pivots = _to_domain(matrix).rref()
    rows = reduced.to_list()
    result = [tuple(_from_domain_element(e) for e in rows[i]) for i in range(len(pivots))]
    return result, tuple(pivots)


def rank(matrix: SparseMatrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: SparseMatrix) -> List[Vector]:
    """Basis of {v : M v = 0}, one vector per free column, in column order."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * matrix.cols
        vector[free] = ONE
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(tuple(vector))
    if len(basis) + len(pivots) != matrix.cols:
        raise InvariantViolation("rank and nullity do not add up to the column count")
    return basis


def solve_many(matrix: SparseMatrix, rhs: Sequence[Sequence[Fraction]]) -> List[Optional[Vector]]:
    """Solve M x = b for each b in rhs with one elimination; None where inconsistent."""
    if not rhs:
        return []
    for b in rhs:
        if len(b) != matrix.rows:
            raise InputError(f"Right-hand side of length {len(b)} does not match {matrix.rows} rows")
    width = matrix.cols
    entries = dict(matrix.entries)
    for k, b in enumerate(rhs):
        for i, value in enumerate(b):
            if value != 0:
                entries[(i, width + k)] = value
    augmented = SparseMatrix(matrix.rows, width + len(rhs), entries)
    reduced, pivots = rref(augmented)
    solutions: List[Optional[Vector]] = []
    for k in range(len(rhs)):
        column = width + k
        if column in pivots:
            solutions.append(None)
            continue
        x = [ZERO] * width
        for row, pivot in zip(reduced, pivots):
            if pivot < width:
                x[pivot] = row[column]
        solutions.append(tuple(x))
    return solutions


def solve(matrix: SparseMatrix, b: Sequence[Fraction]) -> Union[Vector, NoSolution]:
    """One solution of M x = b, or NO_SOLUTION."""
    solution = solve_many(matrix, [b])[0]
    return NO_SOLUTION if solution is None else solution


def independent_subset(vectors: Sequence[Sequence[Fraction]], dim: int) -> List[int]:
    """Indices of the greedy maximal independent subset, earliest vectors first."""
    if not vectors:
        return []
    _, pivots = rref(SparseMatrix.from_columns(vectors, dim))
    return list(pivots)


def span_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> List[Vector]:
    """Canonical basis (reduced echelon rows) of the span."""
    if not vectors:
        return []
    reduced, _ = rref(SparseMatrix.from_rows(vectors, dim))
    return reduced


def span_rank(vectors: Sequence[Sequence[Fraction]], dim: int) -> int:
    if not vectors:
        return 0
    return rank(SparseMatrix.from_rows(vectors, dim))


def in_span(vector: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], dim: int) -> bool:
    if is_zero_vector(vector):
        return True
    return span_rank(list(vectors) + [vector], dim) == span_rank(vectors, dim)


def complement(
    base: Sequence[Sequence[Fraction]], candidates: Sequence[Sequence[Fraction]], dim: int
) -> List[int]:
    """Indices of candidates extending a basis of span(base) greedily."""
    chosen = independent_subset(list(base) + list(candidates), dim)
    offset = len(base)
    return [i - offset for i in chosen if i >= offset]


def intersect_spans(
    first: Sequence[Sequence[Fraction]], second: Sequence[Sequence[Fraction]], dim: int
) -> List[Vector]:
    """Basis of span(first) ∩ span(second)."""
    a = span_basis(first, dim)
    b = span_basis(second, dim)
    if not a or not b:
        return []
    # a·s = b·t  <=>  [A^T | -B^T] (s, t) = 0
    columns = [tuple(v) for v in a] + [tuple(-x for x in v) for v in b]
    relations = kernel_basis(SparseMatrix.from_columns(columns, dim))
    result = []
    for relation in relations:
        vector = [ZERO] * dim
        for coefficient, row in zip(relation[: len(a)], a):
            for i, value in enumerate(row):
                vector[i] += coefficient * value
        result.append(tuple(vector))
    return span_basis(result, dim)


class QuotientSpace:
    """
    A subquotient Z/B of an ambient coordinate space.

    Elements of Z are written uniquely as (part in B) + (combination of reps); the
    coordinates of an element are the coefficients on reps.
    """

    def __init__(self, dim: int, sub: Sequence[Vector], reps: Sequence[Vector]):
        self.dim = dim
        self.sub = list(sub)
        self.reps = list(reps)
        self._basis = SparseMatrix.from_columns(self.sub + self.reps, dim)

    @property
    def dimension(self) -> int:
        return len(self.reps)

    def try_coordinates(self, vectors: Sequence[Sequence[Fraction]]) -> List[Optional[Vector]]:
        """Coordinates of each vector, None for vectors outside Z."""
        if not vectors:
            return []
        offset = len(self.sub)
        if self._basis.cols == 0:
            return [zero_vector(0) if is_zero_vector(v) else None for v in vectors]
        return [
            None if s is None else tuple(s[offset:]) for s in solve_many(self._basis, vectors)
        ]

    def coordinates(self, vectors: Sequence[Sequence[Fraction]]) -> List[Vector]:
        result = self.try_coordinates(vectors)
        for index, coords in enumerate(result):
            if coords is None:
                raise InputError(f"Vector {index} does not lie in the represented space")
        return result  # type: ignore[return-value]


def quotient_of(dim: int, sub: Sequence[Sequence[Fraction]], whole: Sequence[Sequence[Fraction]]) -> QuotientSpace:
    """Quotient span(whole)/span(sub) with reps chosen greedily from whole."""
    sub_basis = span_basis(sub, dim)
    chosen = complement(sub_basis, whole, dim)
    return QuotientSpace(dim, sub_basis, [tuple(whole[i]) for i in chosen])
