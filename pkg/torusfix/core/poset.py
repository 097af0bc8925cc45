"""Finite posets of subgroup pairs (U, H) and stable subsets."""

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
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import InputError
from .lattice import SubgroupLattice, contains, full_torus, identity_component, intersect, trivial_group

logger = logging.getLogger(__name__)

Pair = Tuple[SubgroupLattice, SubgroupLattice]


def pair_leq(p: Pair, q: Pair) -> bool:
    """(U,H) <= (U',H') iff U ⊇ U' and H ⊆ H'."""
    return contains(p[0], q[0]) and contains(q[1], p[1])


def pair_label(p: Pair) -> str:
    return f"({p[0].label()}, {p[1].label()})"


class PairPoset:
    """
    A finite set of pairs (U, H) with U a subtorus contained in H.

    Pairs keep insertion order; `ordered()` gives a deterministic linear extension.
    d_right and d_left default to the right and left components of the pairs.
    """

    def __init__(
        self,
        n: int,
        pairs: Iterable[Pair],
        d_right: Optional[Sequence[SubgroupLattice]] = None,
        d_left: Optional[Sequence[SubgroupLattice]] = None,
    ):
        self.n = n
        self.pairs: List[Pair] = []
        for pair in pairs:
            U, H = pair
            if U.n != n or H.n != n:
                raise InputError(f"Pair {pair_label(pair)} does not live on a torus of rank {n}")
            if not U.is_subtorus:
                raise InputError(f"Left component of {pair_label(pair)} is not a subtorus")
            if not contains(H, U):
                raise InputError(f"Pair {pair_label(pair)} does not satisfy U ⊆ H")
            if pair in self.pairs:
                raise InputError(f"Pair {pair_label(pair)} listed twice")
            self.pairs.append(pair)
        self.d_right = _unique(d_right if d_right is not None else [H for _, H in self.pairs])
        self.d_left = _unique(d_left if d_left is not None else [U for U, _ in self.pairs])
        self._leq: Dict[Tuple[int, int], bool] = {}
        self._covers: Optional[List[Tuple[int, int]]] = None
        self._ordered: Optional[List[int]] = None

    def __len__(self) -> int:
        return len(self.pairs)

    def index(self, pair: Pair) -> int:
        try:
            return self.pairs.index(pair)
        except ValueError as exc:
            raise InputError(f"Pair {pair_label(pair)} is not in the poset") from exc

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.pairs

    def leq(self, i: int, j: int) -> bool:
        key = (i, j)
        if key not in self._leq:
            self._leq[key] = pair_leq(self.pairs[i], self.pairs[j])
        return self._leq[key]

    def less(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def upper_set(self, i: int) -> List[int]:
        """Indices strictly above i, in linear-extension order."""
        return [j for j in self.ordered() if self.less(i, j)]

    def covers(self) -> List[Tuple[int, int]]:
        """Covering relations (i, j): i < j with nothing strictly between."""
        if self._covers is not None:
            return list(self._covers)
        result = []
        for i in self.ordered():
            for j in self.ordered():
                if not self.less(i, j):
                    continue
                if any(self.less(i, k) and self.less(k, j) for k in range(len(self.pairs))):
                    continue
                result.append((i, j))
        self._covers = result
        return list(result)

    def ordered(self) -> List[int]:
        """Linear extension: repeatedly take the first remaining minimal element."""
        if self._ordered is not None:
            return list(self._ordered)
        remaining = list(range(len(self.pairs)))
        order = []
        while remaining:
            for i in remaining:
                if not any(self.less(j, i) for j in remaining):
                    order.append(i)
                    remaining.remove(i)
                    break
        self._ordered = order
        return list(order)


def _unique(groups: Iterable[SubgroupLattice]) -> List[SubgroupLattice]:
    seen: List[SubgroupLattice] = []
    for group in groups:
        if group not in seen:
            seen.append(group)
    return seen


def generate_stable(C: Sequence[SubgroupLattice], n: Optional[int] = None) -> PairPoset:
    """The stable subset generated by C: intersection closure, identity components, pairs."""
    if n is None:
        if not C:
            raise InputError("Torus rank is required when C is empty")
        n = C[0].n
    for group in C:
        if group.n != n:
            raise InputError(f"Subgroup {group.label()} is not in a torus of rank {n}")
    right = _unique([full_torus(n), trivial_group(n)] + list(C))
    changed = True
    while changed:
        changed = False
        for a in list(right):
            for b in list(right):
                c = intersect(a, b)
                if c not in right:
                    right.append(c)
                    changed = True
    left = _unique(identity_component(H) for H in right)
    pairs = [(U, H) for U in left for H in right if contains(H, U)]
    logger.debug(
        "Generated stable subset", extra={"d_right": len(right), "d_left": len(left), "pairs": len(pairs)}
    )
    return PairPoset(n, pairs, d_right=right, d_left=left)


def m_D(P: PairPoset, H: SubgroupLattice) -> SubgroupLattice:
    """Intersection of all members of D_R containing H."""
    if H.n != P.n:
        raise InputError(f"Subgroup of rank {H.n} used with a poset of rank {P.n}")
    result = full_torus(P.n)
    for member in P.d_right:
        if contains(member, H):
            result = intersect(result, member)
    return result
