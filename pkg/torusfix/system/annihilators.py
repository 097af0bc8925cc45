"""
Bounded annihilator search for localization checks.

Candidate multipliers are products of linear forms lying outside a subspace V. The
forms are a complement basis of V, their pairwise sums, seeded random integer
combinations and, optionally, the isotropy weights: lines where an isotropy
annihilator meets the ambient space outside V. Multipliers are tried in order of
total degree, so the first annihilator found is one of least degree among those
tried.
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
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.linalg import Vector, complement, in_span, span_basis
from ..graphs.tgraph import primitive_direction

logger = logging.getLogger(__name__)

IntForm = Tuple[int, ...]
# sorted (form index, exponent) pairs
Multiplier = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class AnnihilatorPolicy:
    power_bound: Optional[int] = None
    random_forms: int = 8
    coefficient_range: int = 3
    pairwise_sums: bool = True
    isotropy_weights: bool = True
    seed: int = 0

    def resolved_power_bound(self, degree_bound: int) -> int:
        return self.power_bound if self.power_bound is not None else 2 * degree_bound

    def to_dict(self, degree_bound: int) -> Dict[str, Any]:
        return {
            "power_bound": self.resolved_power_bound(degree_bound),
            "random_forms": self.random_forms,
            "coefficient_range": self.coefficient_range,
            "pairwise_sums": self.pairwise_sums,
            "isotropy_weights": self.isotropy_weights,
            "seed": self.seed,
        }


def primitive_form(vector: Sequence[Fraction]) -> IntForm:
    """Primitive integer vector on the line of a nonzero rational vector."""
    scale = lcm(*(Fraction(v).denominator for v in vector)) if vector else 1
    return primitive_direction([int(Fraction(v) * scale) for v in vector])


@dataclass
class FormSet:
    forms: List[IntForm] = field(default_factory=list)
    isotropy: List[int] = field(default_factory=list)

    def add(self, vector: Sequence[Fraction]) -> int:
        form = primitive_form(vector)
        if form not in self.forms:
            self.forms.append(form)
        return self.forms.index(form)


def candidate_forms(
    ambient: Sequence[Vector],
    excluded: Sequence[Vector],
    isotropy_lines: Sequence[Vector],
    policy: AnnihilatorPolicy,
    dim: int,
) -> FormSet:
    """Forms in span(ambient) outside span(excluded), deduplicated up to scalar."""
    result = FormSet()
    excluded_basis = span_basis(excluded, dim)
    chosen = [ambient[i] for i in complement(excluded_basis, ambient, dim)]
    for vector in chosen:
        result.add(vector)
    if policy.pairwise_sums:
        for i in range(len(chosen)):
            for j in range(i + 1, len(chosen)):
                result.add(tuple(a + b for a, b in zip(chosen[i], chosen[j])))
    if chosen:
        rng = random.Random(policy.seed)
        width = policy.coefficient_range
        accepted = 0
        attempts = 0
        while accepted < policy.random_forms and attempts < 20 * max(policy.random_forms, 1):
            attempts += 1
            coefficients = [rng.randint(-width, width) for _ in ambient]
            vector = tuple(
                sum((c * v[i] for c, v in zip(coefficients, ambient)), Fraction(0)) for i in range(dim)
            )
            if in_span(vector, excluded_basis, dim):
                continue
            result.add(vector)
            accepted += 1
    if policy.isotropy_weights:
        for line in isotropy_lines:
            if not in_span(line, excluded_basis, dim):
                index = result.add(line)
                if index not in result.isotropy:
                    result.isotropy.append(index)
    return result


def multiplier_sequence(forms: FormSet, power_bound: int) -> Iterator[Multiplier]:
    """Powers of single forms, then of the isotropy product and the product of all forms."""
    count = len(forms.forms)
    iso = sorted(forms.isotropy)
    for t in range(1, power_bound + 1):
        seen = set()
        candidates: List[Multiplier] = [((i, t),) for i in range(count)]
        if len(iso) > 1 and t % len(iso) == 0:
            candidates.append(tuple((i, t // len(iso)) for i in iso))
        if count > 1 and t % count == 0:
            candidates.append(tuple((i, t // count) for i in range(count)))
        for candidate in candidates:
            if candidate not in seen:
                seen.add(candidate)
                yield candidate


def multiplier_degree(multiplier: Multiplier) -> int:
    """Polynomial degree; the cohomological degree is twice this."""
    return sum(e for _, e in multiplier)


@dataclass(frozen=True)
class Survivor:
    degree: int
    side: str
    representative: str

    def to_dict(self) -> Dict[str, Any]:
        return {"degree": self.degree, "side": self.side, "class": self.representative}


@dataclass(frozen=True)
class PendingClass:
    degree: int
    side: str
    representative: str
    payload: Any


@dataclass
class SearchOutcome:
    survivors: List[Survivor] = field(default_factory=list)
    annihilated: int = 0
    attempts: int = 0


def annihilator_search(
    classes: Sequence[PendingClass],
    forms: FormSet,
    power_bound: int,
    annihilates: Callable[[PendingClass, Multiplier], bool],
) -> SearchOutcome:
    """Find an annihilating multiplier for each class; earlier winners are tried first."""
    outcome = SearchOutcome()
    winners: List[Multiplier] = []
    for item in classes:
        found = False
        for multiplier in winners + [m for m in multiplier_sequence(forms, power_bound) if m not in winners]:
            outcome.attempts += 1
            if annihilates(item, multiplier):
                if multiplier not in winners:
                    winners.append(multiplier)
                found = True
                break
        if found:
            outcome.annihilated += 1
        else:
            outcome.survivors.append(Survivor(item.degree, item.side, item.representative))
    logger.debug(
        "Annihilator search finished",
        extra={"classes": len(classes), "survivors": len(outcome.survivors), "attempts": outcome.attempts},
    )
    return outcome
