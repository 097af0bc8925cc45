"""
S^1-realizability of graded Q[x]-algebras.

The pipeline is hypothesis_check, then localized_degree_zero, then the
split-semisimplicity test; a realizable algebra comes with its fixed-point count.
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
from typing import Any, Dict, List, Optional, Tuple

from ..core.linalg import SparseMatrix, solve_many
from ..core.polynomials import HomogeneousPoly
from ..errors import InputError
from ..graphs.cohomology import GraphCohClass, freeness_probe, minimal_generators, multiply_classes
from ..graphs.tgraph import TGraph
from .algebra import (
    CircleAlgebra,
    CircleTerm,
    CircleGenerator,
    degree_zero_algebra,
    localized_degree_zero,
    validate,
    x_multiplication_injective,
)
from .splitting import SplitKind, split_semisimple_test

logger = logging.getLogger(__name__)


class Hypothesis(Enum):
    A1_NONZERO = "A1Nonzero"
    NOT_SPACELIKE = "NotSpacelike"
    INJECTIVITY_A0_A2 = "InjectivityA0A2"
    NILPOTENTS_IN_LOCALIZATION = "NilpotentsInLocalization"


@dataclass
class HypothesisReport:
    a1_zero: bool
    spacelike: bool
    injective: bool
    finitely_generated: bool = True
    spacelike_witness: Optional[str] = None

    @property
    def failures(self) -> List[Hypothesis]:
        out = []
        if not self.a1_zero:
            out.append(Hypothesis.A1_NONZERO)
        if not self.spacelike:
            out.append(Hypothesis.NOT_SPACELIKE)
        if not self.injective:
            out.append(Hypothesis.INJECTIVITY_A0_A2)
        return out

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a1_zero": self.a1_zero,
            "spacelike": self.spacelike,
            "injective_a0_a2": self.injective,
            "finitely_generated": self.finitely_generated,
            "failures": [h.value for h in self.failures],
        }


def hypothesis_check(algebra: CircleAlgebra) -> HypothesisReport:
    """A^1 = 0, A^0 split semisimple, and x: A^0 -> A^2 injective."""
    a1_zero = algebra.degree_dimension(1) == 0
    split = split_semisimple_test(degree_zero_algebra(algebra))
    return HypothesisReport(
        a1_zero=a1_zero,
        spacelike=split.is_split,
        injective=x_multiplication_injective(algebra),
        spacelike_witness=split.witness,
    )


class CircleVerdictKind(Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not-realizable"
    HYPOTHESIS_VIOLATED = "hypothesis-violated"


@dataclass(frozen=True)
class CircleVerdict:
    kind: CircleVerdictKind
    fixed_points: Optional[int] = None
    idempotents: Tuple[str, ...] = ()
    reason: Optional[str] = None
    witness: Optional[str] = None

    @classmethod
    def realizable(cls, count: int, idempotents: Tuple[str, ...]) -> "CircleVerdict":
        return cls(CircleVerdictKind.REALIZABLE, fixed_points=count, idempotents=idempotents)

    @classmethod
    def not_realizable(cls, witness: str) -> "CircleVerdict":
        return cls(CircleVerdictKind.NOT_REALIZABLE, reason="FieldExtension", witness=witness)

    @classmethod
    def hypothesis_violated(cls, which: Hypothesis, witness: Optional[str] = None) -> "CircleVerdict":
        return cls(CircleVerdictKind.HYPOTHESIS_VIOLATED, reason=which.value, witness=witness)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.kind.value}
        if self.kind is CircleVerdictKind.REALIZABLE:
            data["fixed_points"] = self.fixed_points
            data["idempotents"] = list(self.idempotents)
        else:
            data["reason"] = self.reason
            if self.witness is not None:
                data["witness"] = self.witness
        return data


def realizable_circle(algebra: CircleAlgebra) -> CircleVerdict:
    """Classify an algebra as realizable, not realizable, or outside the hypotheses."""
    report = validate(algebra)
    if not report.valid:
        raise InputError("Invalid circle algebra: " + "; ".join(report.violations))
    if not algebra.generators:
        return CircleVerdict.realizable(0, ())

    hypotheses = hypothesis_check(algebra)
    if not hypotheses.passed:
        which = hypotheses.failures[0]
        witness = hypotheses.spacelike_witness if which is Hypothesis.NOT_SPACELIKE else None
        return CircleVerdict.hypothesis_violated(which, witness)

    for g in algebra.free_gens:
        if g.degree % 2:
            return CircleVerdict.hypothesis_violated(Hypothesis.NILPOTENTS_IN_LOCALIZATION, g.name)

    localized = localized_degree_zero(algebra)
    result = split_semisimple_test(localized)
    if result.kind is SplitKind.NILPOTENTS:
        verdict = CircleVerdict.hypothesis_violated(Hypothesis.NILPOTENTS_IN_LOCALIZATION, result.witness)
    elif result.kind is SplitKind.FIELD_EXTENSION:
        verdict = CircleVerdict.not_realizable(result.witness or "")
    else:
        verdict = CircleVerdict.realizable(
            result.rank, tuple(localized.format_element(e) for e in result.idempotents)
        )
    logger.info("Circle realizability decided", extra={"verdict": verdict.kind.value})
    return verdict


def graph_circle_algebra(graph: TGraph, degree_bound: int) -> CircleAlgebra:
    """PID normal form of H*(Γ) for a rank-one T-graph whose cohomology is free."""
    if graph.n != 1:
        raise InputError("Only T-graphs on the circle have a Q[x]-algebra presentation")
    report = freeness_probe(graph, degree_bound)
    generators = minimal_generators(graph, degree_bound)
    if not report.is_free or len(generators) != len(graph.vertices):
        raise InputError("Graph cohomology is not free of full rank within the degree bound")

    names = [f"g{i}" for i in range(len(generators))]
    x = HomogeneousPoly.variable(1, 0)

    def expand(target: GraphCohClass) -> List[Tuple[str, Fraction, int]]:
        d = target.deg
        columns = []
        labels = []
        for name, (deg, cls) in zip(names, generators):
            gd = deg // 2
            if gd <= d:
                columns.append(cls.scale(x.power(d - gd)).flatten())
                labels.append((name, d - gd))
        if not columns:
            return []
        solution = solve_many(SparseMatrix.from_columns(columns, len(target.flatten())), [target.flatten()])[0]
        if solution is None:
            raise InputError("Product does not lie in the span of the generators")
        return [(name, c, p) for (name, p), c in zip(labels, solution) if c != 0]

    mult: Dict[Tuple[str, str], List[CircleTerm]] = {}
    for i, (_, a) in enumerate(generators):
        for j in range(i, len(generators)):
            b = generators[j][1]
            terms = expand(multiply_classes(a, b))
            mult[(names[i], names[j])] = [CircleTerm(g, c, p) for g, c, p in terms]

    one = GraphCohClass(
        graph, 0, tuple(HomogeneousPoly.constant(graph.n) for _ in graph.vertices)
    )
    unit = tuple((g, c) for g, c, _ in expand(one))
    return CircleAlgebra(
        tuple(CircleGenerator(name, deg) for name, (deg, _) in zip(names, generators)),
        unit,
        tuple(((left, right), tuple(terms)) for (left, right), terms in mult.items()),
    )
