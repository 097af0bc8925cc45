#!/usr/bin/env python3
"""
Tests for the bundled fixture documents.
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

import json

import pytest

from torusfix.errors import InputError
from torusfix.fixtures import (
    FIXTURES,
    dump_document,
    fixture_documents,
    fixture_names,
    write_fixture,
)
from torusfix.io.loaders import validate_document

KINDS = {
    "s6_graph.json": "graph",
    "theta3_triangle.json": "graph",
    "double_edge.json": "graph",
    "triangle_parallel.json": "graph",
    "s6_system.json": "system",
    "ac_criterion_1.json": "criterion",
    "ac_criterion_2.json": "criterion",
}


class TestFixtureDocuments:
    """Test fixture lookup and content."""

    def test_names(self):
        """Every builder is listed, plus all."""
        assert fixture_names() == sorted(FIXTURES) + ["all"]

    def test_all_is_union(self):
        """all combines every builder's files."""
        combined = fixture_documents("all")
        for name in FIXTURES:
            assert set(fixture_documents(name)) <= set(combined)

    def test_unknown(self):
        """Unknown names raise InputError."""
        with pytest.raises(InputError):
            fixture_documents("nope")

    def test_documents_match_schemas(self):
        """Each document validates as its input kind."""
        documents = fixture_documents("all")
        for filename, document in documents.items():
            kind = KINDS.get(filename, "algebra")
            validate_document(document, kind)

    def test_s6_system_counts(self):
        """Twelve nodes and eighteen covering maps."""
        document = fixture_documents("s6-system")["s6_system.json"]
        assert len(document["poset"]) == 12
        assert len(document["maps"]) == 18


class TestWriteFixture:
    """Test writing fixtures to disk."""

    def test_sorted_paths(self, tmp_path):
        """Paths come back sorted and hold the dumped documents."""
        paths = write_fixture("ac-family", tmp_path)
        assert paths == sorted(paths)
        documents = fixture_documents("ac-family")
        for path in paths:
            assert path.read_text(encoding="utf-8") == dump_document(documents[path.name])

    def test_dump_is_canonical(self):
        """Sorted keys, two-space indent, trailing newline."""
        text = dump_document({"b": 1, "a": [1, 2]})
        assert text == json.dumps({"a": [1, 2], "b": 1}, indent=2, sort_keys=True) + "\n"

    def test_creates_directory(self, tmp_path):
        """Missing output directories are created."""
        target = tmp_path / "deep" / "dir"
        write_fixture("double-edge", target)
        assert (target / "double_edge.json").exists()


class TestSuiteSettings:
    """Test that the pytest settings in pytest.ini are the ones in effect."""

    def test_slow_marker_registered(self, pytestconfig):
        """Slow checks can be deselected with -m "not slow"."""
        markers = [line.split(":", 1)[0].strip() for line in pytestconfig.getini("markers")]
        assert "slow" in markers

    def test_strict_markers_enabled(self, pytestconfig):
        """Misspelled markers are errors rather than silent no-ops."""
        assert "--strict-markers" in pytestconfig.getini("addopts")
