"""
Systems of cochain algebras over pair posets and their realization conditions.

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

from .annihilators import AnnihilatorPolicy
from .cdga import CdgaPresentation
from .conditions import (
    ConditionVerdict,
    RealizationReport,
    VerdictKind,
    check_LC,
    check_SC,
    check_TC,
    realization_hypotheses,
)
from .criterion import (
    CriterionData,
    CriterionReport,
    GradedAlgebraPresentation,
    check_criterion,
    criterion_data_for_circle_algebra,
)
from .diagram import CdgaMorphism, RStructure, SystemDiagram, validate_system

__all__ = [
    "AnnihilatorPolicy",
    "CdgaMorphism",
    "CdgaPresentation",
    "ConditionVerdict",
    "CriterionData",
    "CriterionReport",
    "GradedAlgebraPresentation",
    "RStructure",
    "RealizationReport",
    "SystemDiagram",
    "VerdictKind",
    "check_LC",
    "check_SC",
    "check_TC",
    "check_criterion",
    "criterion_data_for_circle_algebra",
    "realization_hypotheses",
    "validate_system",
]
