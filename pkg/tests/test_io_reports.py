#!/usr/bin/env python3
"""
Tests for input loading, schema checks and report rendering.
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
import json

import pytest
import yaml

from torusfix.circle.algebra import mk_Ac
from torusfix.errors import InputError, InvariantViolation
from torusfix.fixtures import fixture_documents
from torusfix.io.loaders import load_algebra, load_graph, load_system, read_document, validate_document
from torusfix.reports.documents import (
    circle_report,
    gkm_report,
    graph_cohomology_report,
    graph_realizable_report,
    system_report,
)
from torusfix.reports.render import render, render_json, render_text
from torusfix.reports.schema import SCHEMA_VERSION, validate_report
from torusfix.system.annihilators import AnnihilatorPolicy

S6_GRAPH = fixture_documents("s6-graph")["s6_graph.json"]


class TestReadDocument:
    """Test reading JSON and YAML input files."""

    def test_json_and_yaml_agree(self, tmp_path):
        """Both encodings load the same graph."""
        json_path = tmp_path / "g.json"
        yaml_path = tmp_path / "g.yaml"
        json_path.write_text(json.dumps(S6_GRAPH), encoding="utf-8")
        yaml_path.write_text(yaml.safe_dump(S6_GRAPH), encoding="utf-8")

        assert load_graph(json_path) == load_graph(yaml_path)

    def test_missing_file(self, tmp_path):
        """Unreadable files are input errors."""
        with pytest.raises(InputError, match="Cannot read"):
            read_document(tmp_path / "absent.json")

    def test_malformed_json(self, tmp_path):
        """Parse failures name the file."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InputError, match="Failed to parse"):
            read_document(path)


class TestInputSchemas:
    """Test schema validation of parsed documents."""

    def test_graph_missing_field(self):
        """Graphs need a torus rank."""
        document = {k: v for k, v in S6_GRAPH.items() if k != "n"}
        with pytest.raises(InputError, match="graph input is invalid"):
            validate_document(document, "graph")

    def test_unknown_kind(self):
        """Only known input kinds validate."""
        with pytest.raises(InputError):
            validate_document({}, "poem")

    def test_rational_strings_accepted(self):
        """Coefficients may be written as fractions."""
        algebra = load_algebra(mk_Ac("9/4").to_dict())
        assert algebra == mk_Ac("9/4")

    def test_duplicate_product_rejected(self):
        """A product may be given once."""
        document = mk_Ac(2).to_dict()
        document["mult"] = document["mult"] * 2
        with pytest.raises(InputError, match="given twice"):
            load_algebra(document)

    def test_system_unknown_map_node(self):
        """Maps refer to declared nodes."""
        document = copy.deepcopy(fixture_documents("s6-system")["s6_system.json"])
        document["maps"][0]["target"] = "nowhere"
        with pytest.raises(InputError, match="unknown node"):
            load_system(document)


class TestReports:
    """Test report builders and their schemas."""

    def test_graph_cohomology_report(self):
        """Degree bounds are cohomological; Hilbert values run to D/2."""
        report = graph_cohomology_report(load_graph(S6_GRAPH), 8)
        assert report["schema"] == SCHEMA_VERSION
        assert report["command"] == "graph-cohomology"
        assert report["hilbert"] == [1, 2, 3, 5, 7]
        assert report["generator_degrees"] == [0, 6]
        assert report["realizable"] is True

    def test_graph_realizable_report(self):
        """The isotropy cross-check is reported alongside."""
        graph = load_graph(fixture_documents("triangle-parallel")["triangle_parallel.json"])
        report = graph_realizable_report(graph)
        assert report["realizable"] is False
        assert report["isotropy_crosscheck"] is False

    def test_gkm_report(self):
        """The offending vertex and edges appear on failure."""
        graph = load_graph(fixture_documents("triangle-parallel")["triangle_parallel.json"])
        assert gkm_report(graph) == {
            "schema": SCHEMA_VERSION,
            "command": "gkm-validate",
            "ok": False,
            "vertex": "p",
            "edges": [0, 2],
        }

    def test_circle_report(self):
        """Verdict and hypotheses are both present."""
        report = circle_report(mk_Ac(1))
        assert report["verdict"] == "realizable"
        assert report["fixed_points"] == 2
        assert report["hypotheses"]["failures"] == []

    def test_system_report_without_rstructure(self):
        """Without an R-structure only validation, cohomology and surjectivity run."""
        document = copy.deepcopy(fixture_documents("s6-system")["s6_system.json"])
        del document["rstructure"]
        report = system_report(load_system(document).system, 2, AnnihilatorPolicy())
        assert "triviality" not in report
        assert "hypotheses" not in report
        assert len(report["nodes"]) == 12

    def test_system_report_invalid(self):
        """Invalid diagrams raise with every violation listed."""
        document = copy.deepcopy(fixture_documents("s6-system")["s6_system.json"])
        next(m for m in document["maps"] if m["target"] == "1_H2")["factors"][0]["images"]["v"] = "x1"
        with pytest.raises(InputError, match="Invalid system"):
            system_report(load_system(document).system, 2, AnnihilatorPolicy())

    def test_unknown_command(self):
        """Reports name a known command."""
        with pytest.raises(InvariantViolation):
            validate_report({"schema": SCHEMA_VERSION, "command": "bake"})

    def test_schema_mismatch(self):
        """A malformed report is an internal error."""
        report = graph_realizable_report(load_graph(S6_GRAPH))
        report["realizable"] = "yes"
        with pytest.raises(InvariantViolation):
            validate_report(report)


class TestRender:
    """Test text and JSON rendering."""

    def test_json_deterministic(self):
        """Sorted keys and a trailing newline, identical across runs."""
        first = render_json(graph_cohomology_report(load_graph(S6_GRAPH), 6))
        second = render_json(graph_cohomology_report(load_graph(S6_GRAPH), 6))
        assert first == second
        assert first.endswith("}\n")
        assert json.loads(first)["command"] == "graph-cohomology"

    def test_text_headline(self):
        """Text reports lead with the verdicts."""
        text = render_text(graph_cohomology_report(load_graph(S6_GRAPH), 8))
        lines = text.splitlines()
        assert lines[0] == f"# graph-cohomology ({SCHEMA_VERSION})"
        assert "hilbert: 1 2 3 5 7" in lines
        assert "realizable: true" in lines

    def test_text_cycle_line(self):
        """Cycles are spelled out with their edges."""
        graph = load_graph(fixture_documents("triangle-parallel")["triangle_parallel.json"])
        text = render(graph_realizable_report(graph), "text")
        assert "realizable: false" in text
        assert "cycle in class (1,0): edges" in text

    def test_circle_text(self):
        """Field extensions quote the irreducible factor."""
        assert "not realizable: field extension t^2 - 2" in render(circle_report(mk_Ac(2)), "text")
