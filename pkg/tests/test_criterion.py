#!/usr/bin/env python3
"""
Unit tests for the subspace-indexed realizability criterion.
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

from fractions import Fraction

import pytest

from torusfix.circle.algebra import mk_Ac
from torusfix.errors import InputError
from torusfix.fixtures import fixture_documents
from torusfix.io.loaders import load_criterion
from torusfix.system.conditions import ItemStatus
from torusfix.system.criterion import (
    CriterionData,
    GradedAlgebraPresentation,
    check_criterion,
    criterion_data_for_circle_algebra,
)

ONE = Fraction(1)


def e(n, i):
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def unit_algebra(rank):
    """Q[V] itself: one generator in degree zero."""
    return GradedAlgebraPresentation(rank, [("one", 0)], unit={((0,) * rank, "one"): ONE})


def unit_image(rank, coefficient=ONE):
    return {"one": {((0,) * rank, "one"): coefficient}}


class TestCriterionData:
    """Test the structural checks on criterion input."""

    def test_missing_f0j(self):
        """Every V_j needs a map from A_0."""
        with pytest.raises(InputError, match="f01 is missing"):
            CriterionData(1, [[e(1, 0)], []], [unit_algebra(1), unit_algebra(0)], {})

    def test_identity_map_rejected(self):
        """f_ii must not be given."""
        with pytest.raises(InputError):
            CriterionData(
                1,
                [[e(1, 0)], []],
                [unit_algebra(1), unit_algebra(0)],
                {(0, 0): {}, (0, 1): unit_image(1)},
            )

    def test_full_space_first(self):
        """V0 spans Q^n."""
        with pytest.raises(InputError):
            CriterionData(2, [[e(2, 0)], []], [unit_algebra(1), unit_algebra(0)], {(0, 1): unit_image(1)})

    def test_zero_subspace_required(self):
        """The list contains 0."""
        with pytest.raises(InputError):
            CriterionData(1, [[e(1, 0)]], [unit_algebra(1)], {})

    def test_rank_matches_subspace(self):
        """A_i is an algebra over Q[V_i]."""
        with pytest.raises(InputError):
            CriterionData(1, [[e(1, 0)], []], [unit_algebra(0), unit_algebra(0)], {(0, 1): unit_image(1)})

    def test_degree_checked_images(self):
        """Images keep the degree of their generator."""
        algebra = GradedAlgebraPresentation(
            1, [("one", 0), ("a", 2)], unit={((0,), "one"): ONE}
        )
        images = {"one": {((0,), "one"): ONE}, "a": {((0,), "one"): ONE}}
        with pytest.raises(InputError, match="degree of a"):
            CriterionData(1, [[e(1, 0)], []], [algebra, unit_algebra(0)], {(0, 1): images})


class TestCriterionCheck:
    """Test the three conditions of the criterion."""

    def test_point_data_verified(self):
        """n = 0 with a single entry passes trivially."""
        data = CriterionData(0, [[]], [unit_algebra(0)], {})
        report = check_criterion(data, 4)
        assert report.condition_i is ItemStatus.PASS
        assert report.condition_ii is ItemStatus.PASS
        assert report.condition_iii is ItemStatus.PASS

    def test_sum_closure_fails(self):
        """<e1> + <e2> is missing from the list."""
        subspaces = [[e(3, 0), e(3, 1), e(3, 2)], [e(3, 0)], [e(3, 1)], []]
        algebras = [unit_algebra(3), unit_algebra(1), unit_algebra(1), unit_algebra(0)]
        maps = {(0, j): unit_image(3) for j in (1, 2, 3)}
        report = check_criterion(CriterionData(3, subspaces, algebras, maps), 2)
        assert report.condition_i is ItemStatus.FAIL
        assert report.sum_closure_failures == ["V1 + V2 is not in the list"]

    def test_cocycle_identity_fails(self):
        """f02 = 2 f12 ∘ f01 breaks the cocycle identity on the unit."""
        subspaces = [[e(2, 0), e(2, 1)], [e(2, 0)], []]
        algebras = [unit_algebra(2), unit_algebra(1), unit_algebra(0)]
        maps = {
            (0, 1): unit_image(2),
            (1, 2): unit_image(1),
            (0, 2): unit_image(2, Fraction(2)),
        }
        report = check_criterion(CriterionData(2, subspaces, algebras, maps), 2)
        assert report.condition_iii is ItemStatus.FAIL
        assert report.cocycle_failures == ["(id ⊗ f12) ∘ f01 differs from f02 on one"]

    def test_square_ac_passes(self):
        """A_1 with its localization satisfies every condition."""
        report = check_criterion(criterion_data_for_circle_algebra(mk_Ac(1)), 4)
        assert report.condition_i is ItemStatus.PASS
        assert report.condition_ii is ItemStatus.PASS
        assert report.condition_iii is ItemStatus.PASS
        assert report.to_dict()["conditions"] == {
            "sum_closure": "pass",
            "algebras": "pass",
            "localization": "pass",
        }

    def test_non_square_ac_not_spacelike(self):
        """A_2 localizes to Q(sqrt 2), which is not split."""
        report = check_criterion(criterion_data_for_circle_algebra(mk_Ac(2)), 4)
        assert report.condition_ii is ItemStatus.FAIL
        a1 = report.algebras[1]
        assert not a1.spacelike
        assert a1.spacelike_witness == "t^2 - 2"
        assert report.algebras[0].passed

    def test_fixture_documents(self):
        """The shipped criterion documents load and agree with the direct construction."""
        documents = fixture_documents("ac-criterion")
        passing = check_criterion(load_criterion(documents["ac_criterion_1.json"]), 4)
        failing = check_criterion(load_criterion(documents["ac_criterion_2.json"]), 4)
        assert passing.condition_ii is ItemStatus.PASS
        assert failing.condition_ii is ItemStatus.FAIL
