#!/usr/bin/env python3
"""
Unit tests for circle algebras, split semisimplicity and the circle verdict.
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

from torusfix.circle.algebra import (
    CircleAlgebra,
    FiniteCommAlgebra,
    degree_zero_algebra,
    localized_degree_zero,
    mk_Ac,
    validate,
)
from torusfix.circle.realization import (
    CircleVerdictKind,
    Hypothesis,
    hypothesis_check,
    realizable_circle,
)
from torusfix.circle.splitting import SplitKind, format_univariate, split_semisimple_test
from torusfix.errors import InputError
from torusfix.fixtures import fixture_documents
from torusfix.io.loaders import load_algebra


def dual_numbers():
    """Q[e]/(e^2) placed in degree zero."""
    return CircleAlgebra.build(free=[("one", 0), ("e", 0)], unit="one", mult={("e", "e"): []})


class TestCircleAlgebra:
    """Test the normal form and its validation."""

    def test_ac_degree_dimensions(self):
        """Q[x, a]/(a^2 - x^2) has dimensions 1, 2, 2 in degrees 0, 2, 4."""
        algebra = mk_Ac(1)
        assert [algebra.degree_dimension(k) for k in (0, 1, 2, 3, 4)] == [1, 0, 2, 0, 2]

    def test_ac_products(self):
        """a · a = c x^2 · one."""
        assert mk_Ac(3).product("a", "a") == {(2, "one"): Fraction(3)}
        assert mk_Ac(0).product("a", "a") == {}

    def test_unit_products(self):
        """The unit multiplies by identity on both sides."""
        algebra = mk_Ac(2)
        assert algebra.product("one", "a") == {(0, "a"): Fraction(1)}
        assert algebra.product("a", "one") == {(0, "a"): Fraction(1)}

    def test_ac_valid(self):
        """The A_c family satisfies every identity."""
        for c in (0, 1, -1, Fraction(9, 4)):
            assert validate(mk_Ac(c)).valid

    def test_missing_unit(self):
        """A nonzero algebra designates a unit."""
        report = validate(CircleAlgebra.build(free=[("one", 0)]))
        assert "no unit designated" in report.violations

    def test_unit_in_wrong_degree(self):
        """The unit lives in degree zero."""
        report = validate(CircleAlgebra.build(free=[("a", 2)], unit="a"))
        assert any("not in degree 0" in v for v in report.violations)

    def test_inhomogeneous_product(self):
        """Product terms carry the degree of the factors."""
        algebra = CircleAlgebra.build(
            free=[("one", 0), ("a", 2)], unit="one", mult={("a", "a"): [("one", 1, 1)]}
        )
        assert any("inhomogeneous" in v for v in validate(algebra).violations)

    def test_non_associative_table(self):
        """(e·e)·f = f but e·(e·f) = 0."""
        algebra = CircleAlgebra.build(
            free=[("one", 0), ("e", 0), ("f", 0)],
            unit="one",
            mult={("e", "e"): [("f", 1, 0)], ("e", "f"): [], ("f", "f"): [("f", 1, 0)]},
        )
        report = validate(algebra)
        assert not report.valid
        assert any("associativity" in v for v in report.violations)

    def test_torsion_annihilation(self):
        """x^order kills products with a torsion generator."""
        algebra = CircleAlgebra.build(
            free=[("one", 0)], torsion=[("u", 0, 1)], unit="one", mult={("u", "u"): [("one", 1, 0)]}
        )
        assert any("does not annihilate" in v for v in validate(algebra).violations)

    def test_torsion_truncates_degrees(self):
        """An order-one torsion generator contributes only in its own degree."""
        algebra = CircleAlgebra.build(
            free=[("one", 0)], torsion=[("u", 0, 1)], unit="one", mult={("u", "u"): [("u", 1, 0)]}
        )
        assert validate(algebra).valid
        assert algebra.degree_dimension(0) == 2
        assert algebra.degree_dimension(2) == 1

    def test_unknown_generator_lookup(self):
        """Unknown names raise InputError."""
        with pytest.raises(InputError):
            mk_Ac(1).generator("zz")


class TestLocalization:
    """Test the degree-zero part of S^{-1}A."""

    def test_localized_ac(self):
        """(S^{-1}A_c)^0 = Q[a/x]/((a/x)^2 - c)."""
        localized = localized_degree_zero(mk_Ac(5))
        assert localized.names == ("one", "a/x")
        assert localized.structure[1][1] == (Fraction(5), Fraction(0))
        assert localized.unit == (Fraction(1), Fraction(0))
        assert localized.validate() == []

    def test_odd_free_generator_rejected(self):
        """Odd free generators localize to nilpotents."""
        algebra = CircleAlgebra.build(free=[("one", 0), ("y", 1)], unit="one")
        with pytest.raises(InputError):
            localized_degree_zero(algebra)

    def test_degree_zero_part(self):
        """A^0 of A_c is Q."""
        assert degree_zero_algebra(mk_Ac(2)).names == ("one",)


class TestSplitSemisimple:
    """Test the decision of Q-algebras isomorphic to Q^r."""

    def test_format_univariate(self):
        """Highest coefficient first."""
        assert format_univariate([Fraction(1), Fraction(0), Fraction(-2)]) == "t^2 - 2"
        assert format_univariate([Fraction(2), Fraction(-1)]) == "2*t - 1"

    def test_empty_algebra(self):
        """The zero algebra splits with rank zero."""
        result = split_semisimple_test(FiniteCommAlgebra((), (), ()))
        assert result.is_split
        assert result.rank == 0

    @pytest.mark.parametrize("c", [1, 4, 9, Fraction(1, 4), Fraction(9, 4)])
    def test_squares_split(self, c):
        """Q[t]/(t^2 - s^2) = Q × Q."""
        result = split_semisimple_test(localized_degree_zero(mk_Ac(c)))
        assert result.kind is SplitKind.SPLIT_SEMISIMPLE
        assert result.rank == 2
        assert len(result.idempotents) == 2

    def test_idempotents_are_orthogonal(self):
        """The idempotents sum to one and multiply to zero."""
        algebra = localized_degree_zero(mk_Ac(4))
        e, f = split_semisimple_test(algebra).idempotents
        assert algebra.multiply(e, e) == e
        assert algebra.multiply(e, f) == (Fraction(0), Fraction(0))
        assert tuple(a + b for a, b in zip(e, f)) == algebra.unit

    def test_nilpotent_witness(self):
        """The trace form detects e with e^2 = 0."""
        result = split_semisimple_test(degree_zero_algebra(dual_numbers()))
        assert result.kind is SplitKind.NILPOTENTS
        assert result.witness == "e"

    def test_invalid_algebra_rejected(self):
        """Structure constants must describe a commutative unital algebra."""
        broken = FiniteCommAlgebra(("one",), (((Fraction(2),),),), (Fraction(1),))
        with pytest.raises(InputError):
            split_semisimple_test(broken)


class TestCircleVerdict:
    """Test the realizability decision for circle algebras."""

    @pytest.mark.parametrize("c", [1, 4, 9, Fraction(1, 4), Fraction(9, 4)])
    def test_ac_square_realizable(self, c):
        """Square c gives two fixed points."""
        verdict = realizable_circle(mk_Ac(c))
        assert verdict.kind is CircleVerdictKind.REALIZABLE
        assert verdict.fixed_points == 2
        assert len(verdict.idempotents) == 2

    @pytest.mark.parametrize(
        "c, witness",
        [(2, "t^2 - 2"), (3, "t^2 - 3"), (5, "t^2 - 5"), (-1, "t^2 + 1"), (-4, "t^2 + 4")],
    )
    def test_ac_non_square_not_realizable(self, c, witness):
        """Non-square c leaves an irreducible quadratic."""
        verdict = realizable_circle(mk_Ac(c))
        assert verdict.kind is CircleVerdictKind.NOT_REALIZABLE
        assert verdict.reason == "FieldExtension"
        assert verdict.witness == witness

    def test_ac_zero_has_nilpotents(self):
        """c = 0 makes a/x nilpotent after localization."""
        verdict = realizable_circle(mk_Ac(0))
        assert verdict.kind is CircleVerdictKind.HYPOTHESIS_VIOLATED
        assert verdict.reason == "NilpotentsInLocalization"
        assert verdict.witness == "a/x"

    def test_odd_generator(self):
        """A^1 must vanish."""
        algebra = CircleAlgebra.build(free=[("one", 0), ("y", 1)], unit="one")
        assert hypothesis_check(algebra).failures == [Hypothesis.A1_NONZERO]
        assert realizable_circle(algebra).reason == "A1Nonzero"

    def test_dual_numbers_not_spacelike(self):
        """A^0 with a nilpotent is not spacelike."""
        verdict = realizable_circle(dual_numbers())
        assert verdict.kind is CircleVerdictKind.HYPOTHESIS_VIOLATED
        assert verdict.reason == "NotSpacelike"
        assert verdict.witness == "e"

    def test_torsion_breaks_injectivity(self):
        """x kills an order-one torsion class in degree zero."""
        algebra = CircleAlgebra.build(
            free=[("one", 0)], torsion=[("u", 0, 1)], unit="one", mult={("u", "u"): [("u", 1, 0)]}
        )
        assert realizable_circle(algebra).reason == "InjectivityA0A2"

    def test_zero_algebra(self):
        """No generators means no fixed points."""
        verdict = realizable_circle(CircleAlgebra.build(free=[]))
        assert verdict.kind is CircleVerdictKind.REALIZABLE
        assert verdict.fixed_points == 0

    def test_invalid_algebra_raises(self):
        """Invalid input is reported, not classified."""
        with pytest.raises(InputError):
            realizable_circle(CircleAlgebra.build(free=[("one", 0)]))

    def test_fixture_family(self):
        """The shipped A_c documents load and classify."""
        documents = fixture_documents("ac-family")
        expected = {
            "ac_0.json": CircleVerdictKind.HYPOTHESIS_VIOLATED,
            "ac_1.json": CircleVerdictKind.REALIZABLE,
            "ac_2.json": CircleVerdictKind.NOT_REALIZABLE,
            "ac_4.json": CircleVerdictKind.REALIZABLE,
            "ac_m1.json": CircleVerdictKind.NOT_REALIZABLE,
            "ac_9_4.json": CircleVerdictKind.REALIZABLE,
        }
        assert sorted(documents) == sorted(expected)
        for name, kind in expected.items():
            assert realizable_circle(load_algebra(documents[name])).kind is kind

    def test_verdict_document(self):
        """Verdicts serialise their reason and witness."""
        assert realizable_circle(mk_Ac(2)).to_dict() == {
            "verdict": "not-realizable",
            "reason": "FieldExtension",
            "witness": "t^2 - 2",
        }
