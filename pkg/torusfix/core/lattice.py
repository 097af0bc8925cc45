"""
Closed subgroups of the torus T = (S^1)^n.

A subgroup H is encoded by its annihilator lattice L(H) in Z^n, the characters
vanishing on H, held in a canonical integer echelon form. L(T) = 0 and L({1}) = Z^n.
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
from typing import Any, Dict, List, Sequence, Tuple, Union

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from ..errors import InputError
from .linalg import Vector

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class SubgroupLattice:
    """A closed subgroup of the n-torus, via its canonical annihilator basis."""

    n: int
    ann: Tuple[IntVector, ...]

    @property
    def rank(self) -> int:
        return len(self.ann)

    @property
    def is_full_torus(self) -> bool:
        return not self.ann

    @property
    def is_trivial(self) -> bool:
        return self.rank == self.n and all(
            row[i] == 1 for i, row in zip(_pivot_columns(self.ann), self.ann)
        )

    @property
    def is_subtorus(self) -> bool:
        return identity_component(self) == self

    def rational_basis(self) -> List[Vector]:
        return [tuple(Fraction(v) for v in row) for row in self.ann]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "ann": [list(row) for row in self.ann]}

    def label(self) -> str:
        if self.is_full_torus:
            return "T"
        if self.is_trivial:
            return "trivial"
        return "ann[" + ";".join(",".join(str(v) for v in row) for row in self.ann) + "]"

    def __str__(self) -> str:
        return self.label()


def _pivot_columns(rows: Sequence[IntVector]) -> List[int]:
    return [next(i for i, v in enumerate(row) if v != 0) for row in rows]


def _check_rank(first: SubgroupLattice, second: SubgroupLattice) -> None:
    if first.n != second.n:
        raise InputError(f"Subgroups of tori of rank {first.n} and {second.n} cannot be compared")


def canonicalize(rows: Sequence[Sequence[int]], n: int) -> SubgroupLattice:
    """Canonical echelon basis of the Z-span: positive pivots, reduced entries above them."""
    if n < 0:
        raise InputError(f"Torus rank must be non-negative, got {n}")
    vectors = []
    for row in rows:
        if len(row) != n:
            raise InputError(f"Character {list(row)} does not have length {n}")
        vector = tuple(int(v) for v in row)
        if any(vector):
            vectors.append(vector)
    if not vectors:
        return SubgroupLattice(n, ())
    # sympy puts pivots bottom-right on columns; reversing coordinates and
    # column order turns that into row echelon form with leading pivots.
    columns = Matrix([[v[n - 1 - i] for v in vectors] for i in range(n)])
    form = hermite_normal_form(columns)
    basis = []
    for j in range(form.cols - 1, -1, -1):
        basis.append(tuple(int(form[n - 1 - i, j]) for i in range(n)))
    return SubgroupLattice(n, tuple(basis))


def full_torus(n: int) -> SubgroupLattice:
    return SubgroupLattice(n, ())


def trivial_group(n: int) -> SubgroupLattice:
    return canonicalize([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)


def contains(H: SubgroupLattice, K: SubgroupLattice) -> bool:
    """True iff K is a subgroup of H, i.e. L(H) is contained in L(K)."""
    _check_rank(H, K)
    for row in H.ann:
        if canonicalize(list(K.ann) + [row], K.n) != K:
            return False
    return True


def intersect(H: SubgroupLattice, K: SubgroupLattice) -> SubgroupLattice:
    """H ∩ K, with L(H ∩ K) = L(H) + L(K)."""
    _check_rank(H, K)
    return canonicalize(list(H.ann) + list(K.ann), H.n)


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> List[IntVector]:
    """Basis of {v in Z^n : r·v = 0 for every row r}; always a saturated lattice."""
    r = len(rows)
    # The lattice {(B v, v)} has echelon rows with zero B-part exactly on the kernel.
    generators = []
    for j in range(n):
        generators.append(tuple(row[j] for row in rows) + tuple(1 if i == j else 0 for i in range(n)))
    if not generators:
        return []
    echelon = canonicalize(generators, r + n)
    return [row[r:] for row in echelon.ann if not any(row[:r])]


def identity_component(H: SubgroupLattice) -> SubgroupLattice:
    """H_0, whose annihilator is the saturation of L(H)."""
    orthogonal = integer_kernel(H.ann, H.n)
    return canonicalize(integer_kernel(orthogonal, H.n), H.n)


def quotient_char_space(U: SubgroupLattice) -> List[Vector]:
    """Rational basis of L(U)⊗Q; the degree-two generators of R_{T/U}."""
    if not U.is_subtorus:
        raise InputError(f"{U.label()} is not a subtorus")
    return U.rational_basis()


SubgroupLiteral = Union[str, Dict[str, Any]]


def parse_subgroup(literal: SubgroupLiteral, n: int) -> SubgroupLattice:
    """Parse {"ann": [[...]], "n": n} or the shorthands "T" and "trivial"."""
    if isinstance(literal, str):
        if literal == "T":
            return full_torus(n)
        if literal == "trivial":
            return trivial_group(n)
        raise InputError(f"Unknown subgroup shorthand {literal!r}")
    if not isinstance(literal, dict) or "ann" not in literal:
        raise InputError(f"Subgroup literal must be an object with 'ann', got {literal!r}")
    declared = literal.get("n", n)
    if declared != n:
        raise InputError(f"Subgroup literal declares rank {declared}, expected {n}")
    return canonicalize(literal["ann"], n)
