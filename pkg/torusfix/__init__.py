#!/usr/bin/env python3
"""
torusfix - exact checkers for torus actions

Decides realizability questions about rational torus actions from algebraic data:
T-graph cohomology with the forest criterion, circle actions presented as graded
Q[x]-algebras, and systems of cochain algebras over pair posets of subgroups with
their triviality, surjectivity and localization conditions.

Usage:
    from torusfix import TGraph, hilbert_function, realizable

    graph = TGraph.build(2, ["N", "S"], [("N", "S", (1, 0)), ("N", "S", (0, 1)), ("N", "S", (1, -1))])
    print(hilbert_function(graph, 4), realizable(graph).realizable)

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

__version__ = "1.0.0"
__author__ = "Firefly Software Solutions Inc"
__license__ = "Apache 2.0"

# Errors
from .errors import InputError, InvariantViolation, TorusfixError

# Lattices and posets
from .core import PairPoset, SubgroupLattice, generate_stable, m_D

# Graphs
from .graphs import TGraph, freeness_probe, gkm_axiom_check, hilbert_function, realizable

# Circle actions
from .circle import CircleAlgebra, mk_Ac, realizable_circle, split_semisimple_test

# Systems
from .system import (
    AnnihilatorPolicy,
    SystemDiagram,
    check_LC,
    check_SC,
    check_TC,
    check_criterion,
    realization_hypotheses,
    validate_system,
)

# Configuration
from .config import CheckerConfig, ConfigurationManager, LoggingConfig

__all__ = [
    # Version info
    "__version__",
    "__author__",
    "__license__",
    # Errors
    "TorusfixError",
    "InputError",
    "InvariantViolation",
    # Lattices and posets
    "SubgroupLattice",
    "PairPoset",
    "generate_stable",
    "m_D",
    # Graphs
    "TGraph",
    "hilbert_function",
    "freeness_probe",
    "realizable",
    "gkm_axiom_check",
    # Circle actions
    "CircleAlgebra",
    "mk_Ac",
    "realizable_circle",
    "split_semisimple_test",
    # Systems
    "AnnihilatorPolicy",
    "SystemDiagram",
    "validate_system",
    "check_TC",
    "check_SC",
    "check_LC",
    "check_criterion",
    "realization_hypotheses",
    # Configuration
    "CheckerConfig",
    "ConfigurationManager",
    "LoggingConfig",
]
