#!/usr/bin/env python3
"""
Unit tests for T-graphs, the forest criterion and graph cohomology.
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

import random

import pytest
from sympy import Matrix

from torusfix.circle.realization import CircleVerdictKind, graph_circle_algebra, realizable_circle
from torusfix.core.lattice import canonicalize, full_torus, trivial_group
from torusfix.core.polynomials import HomogeneousPoly
from torusfix.errors import InputError
from torusfix.fixtures import fixture_documents
from torusfix.graphs.cohomology import (
    FreenessKind,
    GraphCohClass,
    freeness_probe,
    graph_cohomology_basis,
    hilbert_function,
    minimal_generators,
    multiply_classes,
)
from torusfix.graphs.tgraph import (
    TGraph,
    fixed_subgraph,
    gkm_axiom_check,
    graph_isotropy_poset,
    parallel_classes,
    realizable,
    realizable_by_isotropy,
)
from torusfix.io.loaders import load_graph


def fixture_graph(name):
    documents = fixture_documents(name)
    return load_graph(documents[f"{name.replace('-', '_')}.json"])


@pytest.fixture
def s6():
    return fixture_graph("s6-graph")


def binary_hilbert_oracle(graph, d):
    """dim H^{2d} for n = 2: a binary form vanishes on ker(a) iff a divides it."""
    rows = []
    size = d + 1
    for edge in graph.edges:
        point = (-edge.label[1], edge.label[0])
        row = [0] * (len(graph.vertices) * size)
        p = graph.vertex_index(edge.u)
        q = graph.vertex_index(edge.v)
        for i in range(size):
            value = point[0] ** i * point[1] ** (d - i)
            row[p * size + i] += value
            row[q * size + i] -= value
        rows.append(row)
    columns = len(graph.vertices) * size
    if not rows:
        return columns
    return columns - Matrix(rows).rank()


def random_graph(rng, n, vertices, edges):
    names = [f"v{i}" for i in range(vertices)]
    out = []
    for _ in range(edges):
        u, v = rng.sample(names, 2)
        label = [0] * n
        while not any(label):
            label = [rng.randint(-3, 3) for _ in range(n)]
        out.append((u, v, label))
    return TGraph.build(n, names, out)


class TestTGraph:
    """Test construction and validation of T-graphs."""

    def test_loop_rejected(self):
        """Edges must join distinct vertices."""
        with pytest.raises(InputError):
            TGraph.build(1, ["p"], [("p", "p", [1])])

    def test_zero_label_rejected(self):
        """Labels must be nonzero characters."""
        with pytest.raises(InputError):
            TGraph.build(2, ["p", "q"], [("p", "q", [0, 0])])

    def test_label_length_checked(self):
        """Labels have n entries."""
        with pytest.raises(InputError):
            TGraph.build(2, ["p", "q"], [("p", "q", [1])])

    def test_unknown_vertex_rejected(self):
        """Edges refer to declared vertices."""
        with pytest.raises(InputError):
            TGraph.build(1, ["p"], [("p", "q", [1])])

    def test_duplicate_vertices_rejected(self):
        """Vertex identifiers are unique."""
        with pytest.raises(InputError):
            TGraph.build(1, ["p", "p"], [])


class TestFixedSubgraph:
    """Test Γ^H for subgroups of the torus."""

    def test_trivial_group_keeps_everything(self, s6):
        """The annihilator of the trivial group spans every label."""
        assert len(fixed_subgraph(s6, trivial_group(2)).edges) == 3

    def test_full_torus_keeps_nothing(self, s6):
        """The torus has zero annihilator, so no nonzero label lies in its span."""
        sub = fixed_subgraph(s6, full_torus(2))
        assert sub.edges == ()
        assert sub.vertices == s6.vertices

    def test_circle_keeps_its_edge(self, s6):
        """The subtorus killed by (1,-1) fixes only that sphere."""
        sub = fixed_subgraph(s6, canonicalize([[1, -1]], 2))
        assert [e.label for e in sub.edges] == [(1, -1)]
        assert sub.vertices == s6.vertices

    def test_rank_mismatch_rejected(self, s6):
        """The subgroup lives in the graph's torus."""
        with pytest.raises(InputError):
            fixed_subgraph(s6, full_torus(3))


class TestForestCriterion:
    """Test parallel classes and the realizability verdict."""

    def test_parallel_classes_primitive(self):
        """(1,0), (2,0) and (-1,0) share a class."""
        graph = fixture_graph("triangle-parallel")
        assert parallel_classes(graph) == {(1, 0): [0, 1, 2]}

    def test_s6_realizable(self, s6):
        """Distinct directions give singleton forests."""
        verdict = realizable(s6)
        assert verdict.realizable
        assert len(verdict.witnesses) == 3
        assert verdict.cycles() == []

    def test_triangle_cycle(self):
        """A parallel triangle is a cycle and is reported."""
        verdict = realizable(fixture_graph("triangle-parallel"))
        assert not verdict.realizable
        cycle = verdict.cycles()[0]
        assert set(cycle.cycle) == {0, 1, 2}
        assert cycle.to_dict()["forest"] is False

    def test_parallel_double_edge_is_cycle(self):
        """Two parallel edges between the same vertices form a cycle."""
        graph = TGraph.build(1, ["p", "q"], [("p", "q", [1]), ("q", "p", [2])])
        assert not realizable(graph).realizable

    def test_isotropy_crosscheck_agrees(self, s6):
        """The isotropy-poset evaluation agrees with the direct one."""
        assert realizable_by_isotropy(s6)
        assert not realizable_by_isotropy(fixture_graph("triangle-parallel"))

    def test_isotropy_poset_of_s6(self, s6):
        """The three isotropy circles generate the twelve pairs of the S^6 poset."""
        poset = graph_isotropy_poset(s6)
        assert len(poset) == 12
        assert len(poset.d_left) == 5

    def test_isotropy_poset_keeps_finite_groups_on_the_right(self):
        """A label (2,0) contributes a disconnected group whose identity component is ker(1,0)."""
        poset = graph_isotropy_poset(fixture_graph("triangle-parallel"))
        assert len(poset.d_right) == 4
        assert len(poset.d_left) == 3


class TestGkmAxiom:
    """Test pairwise independence at vertices."""

    def test_s6_is_gkm(self, s6):
        """The three weights are pairwise independent."""
        assert gkm_axiom_check(s6).ok

    def test_parallel_pair_reported(self):
        """The first offending vertex and edge pair are named."""
        check = gkm_axiom_check(fixture_graph("triangle-parallel"))
        assert not check.ok
        assert check.vertex == "p"
        assert check.edge_pair == (0, 2)
        assert check.to_dict()["edges"] == [0, 2]


class TestGraphCohomology:
    """Test Hilbert functions, generators and freeness."""

    def test_s6_hilbert(self, s6):
        """dim H^{2d} = (d+1) + max(0, d-2)."""
        assert hilbert_function(s6, 4) == [1, 2, 3, 5, 7]

    def test_s6_generators(self, s6):
        """1 and the class w1 w2 w3 at one vertex."""
        assert [deg for deg, _ in minimal_generators(s6, 8)] == [0, 6]

    def test_s6_free(self, s6):
        """Generators in degrees 0 and 6 span freely."""
        probe = freeness_probe(s6, 8)
        assert probe.is_free
        assert probe.generator_degrees == (0, 6)
        assert probe.to_dict()["verdict"] == "free-up-to"

    @pytest.mark.slow
    def test_s6_free_up_to_twelve(self, s6):
        """At D = 12 the module stays free on generators of degrees 0 and 6."""
        probe = freeness_probe(s6, 12)
        assert probe.kind is FreenessKind.FREE_UP_TO
        assert probe.degree_bound == 12
        assert probe.generator_degrees == (0, 6)

    def test_double_edge(self):
        """Two independent weights on one pair of vertices."""
        graph = fixture_graph("double-edge")
        assert hilbert_function(graph, 4) == [1, 2, 4, 6, 8]
        assert freeness_probe(graph, 6).generator_degrees == (0, 4)

    def test_isolated_vertices(self):
        """Without edges H* is R ⊕ R."""
        graph = TGraph.build(1, ["p", "q"], [])
        assert hilbert_function(graph, 2) == [2, 2, 2]

    def test_single_edge_circle(self):
        """Equivariant cohomology of S^2 with a rotation."""
        graph = TGraph.build(1, ["p", "q"], [("p", "q", [1])])
        assert len(graph_cohomology_basis(graph, 1)) == 2
        assert {deg for deg, _ in minimal_generators(graph, 2)} == {0, 2}

    def test_negative_degree_rejected(self, s6):
        """Degrees start at zero."""
        with pytest.raises(InputError):
            graph_cohomology_basis(s6, -1)

    def test_basis_classes_satisfy_edge_condition(self, s6):
        """Every basis class differs across an edge by a multiple of its label."""
        for cls in graph_cohomology_basis(s6, 3):
            assert cls.degree == 6
            difference = cls.at("N") - cls.at("S")
            for edge in s6.edges:
                point = (-edge.label[1], edge.label[0])
                assert difference.evaluate(point) == 0

    def test_products_of_classes(self, s6):
        """The constant class is a unit and degrees add."""
        one = GraphCohClass(s6, 0, (HomogeneousPoly.constant(2), HomogeneousPoly.constant(2)))
        first, second = graph_cohomology_basis(s6, 1)[:2]

        assert multiply_classes(one, first) == first
        product = multiply_classes(first, second)
        assert product.degree == 4
        assert product.values == tuple(p * q for p, q in zip(first.values, second.values))

    def test_products_need_one_graph(self, s6):
        """Classes of different graphs do not multiply."""
        other = fixture_graph("double-edge")
        with pytest.raises(InputError, match="different graphs"):
            multiply_classes(graph_cohomology_basis(s6, 0)[0], graph_cohomology_basis(other, 0)[0])

    def test_theta3_not_free(self):
        """Four generators exceed the generic rank three."""
        probe = freeness_probe(fixture_graph("theta3-triangle"), 4)
        assert probe.kind is FreenessKind.NOT_FREE
        assert probe.rank_excess == (4, 3)
        assert probe.to_dict()["certificate"]["kind"] == "rank-excess"

    def test_relabel_invariance(self, s6):
        """GL(2, Z) changes coordinates but not dimensions."""
        swapped = s6.relabel([[1, 1], [0, 1]])
        assert hilbert_function(swapped, 4) == hilbert_function(s6, 4)

    def test_matches_binary_oracle(self, s6):
        """Exact dimensions agree with an independent rank computation."""
        for graph in (s6, fixture_graph("double-edge"), fixture_graph("triangle-parallel")):
            assert hilbert_function(graph, 4) == [binary_hilbert_oracle(graph, d) for d in range(5)]

    @pytest.mark.slow
    def test_random_low_rank_graphs_are_free(self):
        """Over Q[t] and Q[t1, t2] graph cohomology is always free."""
        rng = random.Random(20240611)
        for _ in range(6):
            n = rng.choice([1, 2])
            graph = random_graph(rng, n, rng.randint(2, 4), rng.randint(1, 5))
            assert freeness_probe(graph, 6).is_free
            if n == 2:
                assert hilbert_function(graph, 3) == [binary_hilbert_oracle(graph, d) for d in range(4)]


class TestGraphCircleAlgebra:
    """Test the Q[x]-algebra presentation of rank-one graph cohomology."""

    def test_sphere_is_realizable(self):
        """The rotated sphere has two fixed points."""
        graph = TGraph.build(1, ["p", "q"], [("p", "q", [1])])
        algebra = graph_circle_algebra(graph, 4)
        assert [g.degree for g in algebra.generators] == [0, 2]
        verdict = realizable_circle(algebra)
        assert verdict.kind is CircleVerdictKind.REALIZABLE
        assert verdict.fixed_points == 2

    def test_rank_two_rejected(self, s6):
        """Only circle graphs have a Q[x] presentation."""
        with pytest.raises(InputError):
            graph_circle_algebra(s6, 6)
