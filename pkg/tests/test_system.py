#!/usr/bin/env python3
"""
Tests for system diagrams and the triviality, surjectivity and localization checks.

The S^6 diagram is loaded once per module; the heavier checks are marked slow.
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

import copy

import pytest

from torusfix.core.lattice import canonicalize, full_torus
from torusfix.errors import InputError
from torusfix.fixtures import fixture_documents
from torusfix.io.loaders import load_system
from torusfix.system.annihilators import AnnihilatorPolicy
from torusfix.system.conditions import (
    ItemStatus,
    VerdictKind,
    check_LC,
    check_SC,
    check_TC,
    realization_hypotheses,
)
from torusfix.system.diagram import validate_system


def s6_document():
    return copy.deepcopy(fixture_documents("s6-system")["s6_system.json"])


def find_map(document, source, target):
    return next(m for m in document["maps"] if m["source"] == source and m["target"] == target)


def unit_survivor_document():
    """Q[x] over the circle mapping to the zero algebra at the fixed points."""
    return {
        "n": 1,
        "poset": [
            {"name": "1_1", "U": "trivial", "H": "trivial"},
            {"name": "1_T", "U": "trivial", "H": "T"},
        ],
        "algebras": {
            "1_1": {"factors": [{"gens": [{"name": "x", "deg": 2}]}]},
            "1_T": {"factors": []},
        },
        "maps": [{"source": "1_1", "target": "1_T", "factors": []}],
        "rstructure": {"1_1": ["x"], "1_T": ["0"]},
    }


@pytest.fixture(scope="module")
def s6():
    return load_system(s6_document()).system


class TestSystemLoading:
    """Test loading and validating system diagrams."""

    def test_s6_shape(self, s6):
        """Twelve nodes, one map per covering relation."""
        assert len(s6.names) == 12
        assert len(s6.maps) == 18
        assert s6.index_of("T_T") == s6.names.index("T_T")

    def test_s6_valid(self, s6):
        """Differentials, maps, squares and the R-structure all check out."""
        report = validate_system(s6)
        assert report.valid, report.violations

    def test_unknown_node_lookup(self, s6):
        """Unknown node names raise InputError."""
        with pytest.raises(InputError):
            s6.index_of("nowhere")

    def test_node_hilbert(self, s6):
        """H*(A(1,1)) = Q[x1, x3] ⊗ Q[b]/(b^2 - x1 x2 x3 b)."""
        assert s6.algebras[s6.index_of("1_1")].hilbert(6) == [1, 0, 2, 0, 3, 0, 5]

    def test_missing_map_rejected(self):
        """Every covering relation carries a map."""
        document = s6_document()
        document["maps"].remove(find_map(document, "T_T", "H1_T"))
        with pytest.raises(InputError):
            load_system(document)

    def test_unknown_algebra_node_rejected(self):
        """Algebras are keyed by node names."""
        document = s6_document()
        document["algebras"]["ghost"] = {"factors": []}
        with pytest.raises(InputError):
            load_system(document)

    def test_degree_breaking_map_named(self):
        """A map sending v to a degree-two class is reported by name."""
        document = s6_document()
        find_map(document, "1_1", "1_H1")["factors"][0]["images"]["v"] = "x1"
        report = validate_system(load_system(document).system)
        assert not report.valid
        assert any(v.startswith("map 1_1 -> 1_H1") for v in report.violations)


class TestTriviality:
    """Test the base change condition."""

    @pytest.mark.slow
    def test_s6_verified(self, s6):
        """All pairs with equal H satisfy base change up to degree 6."""
        verdicts = check_TC(s6, 6)
        assert verdicts
        assert all(v.kind is VerdictKind.VERIFIED for v in verdicts)

    @pytest.mark.slow
    def test_s6_verified_to_ten(self, s6):
        """Base change holds on every applicable pair up to degree 10."""
        verdicts = check_TC(s6, 10)
        assert verdicts
        assert all(v.kind is VerdictKind.VERIFIED and v.degree_bound == 10 for v in verdicts)

    def test_corrupted_map_fails(self):
        """Killing x1 on one fixed point loses a degree-two class."""
        document = s6_document()
        find_map(document, "H1_T", "1_T")["factors"][1]["images"]["x1"] = "0"
        verdicts = check_TC(load_system(document).system, 4)
        verdict = next(v for v in verdicts if v.location == "H1_T -> 1_T")
        assert verdict.kind is VerdictKind.FAILS
        assert verdict.degree == 2
        assert verdict.defect == 1
        assert verdict.to_dict()["verdict"] == "fails"

    def test_needs_rstructure(self):
        """Base change is measured through the R-structure."""
        document = s6_document()
        del document["rstructure"]
        with pytest.raises(InputError):
            check_TC(load_system(document).system, 2)


class TestSurjectivity:
    """Test surjectivity onto the equalizer of the upper set."""

    def test_s6_generic_node_fails(self, s6):
        """The generic node misses three equalizer classes in degree three."""
        verdicts = {v.location: v for v in check_SC(s6, 4)}
        verdict = verdicts["1_1"]
        assert verdict.kind is VerdictKind.FAILS
        assert verdict.degree == 3
        assert verdict.defect == 3

    def test_maximal_node_verified(self, s6):
        """A node with empty upper set is trivially surjective."""
        verdicts = {v.location: v for v in check_SC(s6, 4)}
        assert verdicts["T_T"].kind is VerdictKind.VERIFIED


class TestLocalization:
    """Test the annihilator search for kernels and cokernels."""

    @pytest.mark.slow
    def test_s6_verified(self, s6):
        """Every kernel and cokernel is annihilated by a tried multiplier."""
        verdicts = check_LC(s6, 6, AnnihilatorPolicy(seed=7))
        assert verdicts
        assert all(v.kind is VerdictKind.VERIFIED for v in verdicts)

    @pytest.mark.slow
    def test_s6_verified_to_ten_with_default_policy(self, s6):
        """The default search annihilates every kernel and cokernel up to degree 10."""
        verdicts = check_LC(s6, 10, AnnihilatorPolicy())
        assert verdicts
        assert all(v.kind is VerdictKind.VERIFIED and v.degree_bound == 10 for v in verdicts)

    def test_unit_survives(self):
        """x^p · 1 is never exact, so the unit class survives."""
        loaded = load_system(unit_survivor_document())
        assert validate_system(loaded.system).valid
        verdicts = check_LC(loaded.system, 4, tori=[full_torus(1)])
        verdict = next(v for v in verdicts if v.location == "1_1 @ T")
        assert verdict.kind is VerdictKind.INCONCLUSIVE
        assert any(s.representative == "1" and s.side == "kernel" for s in verdict.survivors)
        assert verdict.details["kernel_dims"][0] == 1

    def test_never_fails(self):
        """Localization reports only Verified or Inconclusive."""
        loaded = load_system(unit_survivor_document())
        kinds = {v.kind for v in check_LC(loaded.system, 2, tori=[full_torus(1)])}
        assert VerdictKind.FAILS not in kinds

    def test_rejects_non_torus(self):
        """Extra localization groups must be connected."""
        loaded = load_system(unit_survivor_document())
        with pytest.raises(InputError):
            check_LC(loaded.system, 2, tori=[canonicalize([[2]], 1)])


class TestRealizationHypotheses:
    """Test the hypothesis lists of the realization theorems."""

    @pytest.mark.slow
    def test_s6_passes(self, s6):
        """Both lists pass for the S^6 diagram at degree ten."""
        report = realization_hypotheses(s6, 10)
        assert report.infinite.status is ItemStatus.PASS
        assert report.finite.status is ItemStatus.PASS
        assert len(report.nodes) == 12
        assert report.to_dict()["finite_complex"]["status"] == "pass"
