"""
Report documents for each command.

Builders run the checks and assemble plain dicts; every dict is checked against its
schema before it leaves this module, so the CLI only serialises.
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
from typing import Any, Dict, Optional, Sequence

from ..circle.algebra import CircleAlgebra
from ..circle.realization import hypothesis_check, realizable_circle
from ..core.lattice import SubgroupLattice
from ..core.poset import pair_label
from ..errors import InputError
from ..graphs.cohomology import freeness_probe, hilbert_function
from ..graphs.tgraph import TGraph, gkm_axiom_check, realizable, realizable_by_isotropy
from ..system.annihilators import AnnihilatorPolicy
from ..system.conditions import check_SC, realization_hypotheses
from ..system.criterion import CriterionData, check_criterion
from ..system.diagram import SystemDiagram, validate_system
from .schema import SCHEMA_VERSION, validate_report

logger = logging.getLogger(__name__)


def _document(command: str, body: Dict[str, Any]) -> Dict[str, Any]:
    document = {"schema": SCHEMA_VERSION, "command": command, **body}
    validate_report(document)
    return document


def graph_cohomology_report(graph: TGraph, degree_bound: int) -> Dict[str, Any]:
    """Hilbert function up to cohomological degree D, freeness probe and forest verdict."""
    probe = freeness_probe(graph, degree_bound)
    verdict = realizable(graph)
    return _document(
        "graph-cohomology",
        {
            "degree_bound": degree_bound,
            "hilbert": hilbert_function(graph, degree_bound // 2),
            "generator_degrees": list(probe.generator_degrees),
            "freeness": probe.to_dict(),
            **verdict.to_dict(),
        },
    )


def graph_realizable_report(graph: TGraph) -> Dict[str, Any]:
    verdict = realizable(graph)
    return _document(
        "graph-realizable",
        {**verdict.to_dict(), "isotropy_crosscheck": realizable_by_isotropy(graph)},
    )


def gkm_report(graph: TGraph) -> Dict[str, Any]:
    return _document("gkm-validate", gkm_axiom_check(graph).to_dict())


def circle_report(algebra: CircleAlgebra) -> Dict[str, Any]:
    verdict = realizable_circle(algebra)
    return _document(
        "circle-realizable",
        {**verdict.to_dict(), "hypotheses": hypothesis_check(algebra).to_dict()},
    )


def system_report(
    system: SystemDiagram,
    degree_bound: int,
    policy: AnnihilatorPolicy,
    tori: Sequence[SubgroupLattice] = (),
) -> Dict[str, Any]:
    """
    Validation, node cohomology and the realization conditions.

    Raises InputError naming every violation when the system is not a valid diagram.
    TC, LC and the hypothesis lists need an R-structure and are omitted without one.
    """
    validation = validate_system(system)
    if not validation.valid:
        raise InputError("Invalid system: " + "; ".join(validation.violations))

    body: Dict[str, Any] = {
        "degree_bound": degree_bound,
        "nodes": [
            {
                "node": system.names[i],
                "pair": pair_label(system.poset.pairs[i]),
                "hilbert": system.algebras[i].hilbert(degree_bound),
            }
            for i in system.poset.ordered()
        ],
        "surjectivity": [v.to_dict() for v in check_SC(system, degree_bound)],
    }
    if system.rstructure is not None:
        report = realization_hypotheses(system, degree_bound, policy, tori)
        body["triviality"] = [v.to_dict() for v in report.triviality]
        body["localization"] = [v.to_dict() for v in report.localization]
        body["localization_policy"] = policy.to_dict(degree_bound)
        body["hypotheses"] = {
            "nodes": [node.to_dict() for node in report.nodes],
            "infinite_complex": report.infinite.to_dict(),
            "finite_complex": report.finite.to_dict(),
        }
    else:
        logger.info("System has no R-structure; triviality and localization skipped")
    return _document("system-check", body)


def criterion_report(
    data: CriterionData, degree_bound: int, policy: Optional[AnnihilatorPolicy] = None
) -> Dict[str, Any]:
    policy = policy or AnnihilatorPolicy()
    report = check_criterion(data, degree_bound, policy)
    return _document(
        "criterion-check",
        {**report.to_dict(), "localization_policy": policy.to_dict(degree_bound)},
    )


def fixtures_report(written: Sequence[str]) -> Dict[str, Any]:
    return _document("fixtures", {"written": list(written)})
