#!/usr/bin/env python3
"""
Unit tests for configuration classes.
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

import pytest
import json
import yaml
import tempfile
import os
from pathlib import Path
from unittest.mock import patch

from torusfix.config.checker_config import (
    AnnihilatorPolicyConfig,
    CheckerConfig,
    ConfigurationManager,
    LoggingConfig,
)
from torusfix.errors import InputError


class TestLoggingConfig:
    """Test LoggingConfig class."""

    def test_default_values(self):
        """Test default configuration values."""
        config = LoggingConfig()

        assert config.level == "WARNING"
        assert config.format == "text"
        assert config.output_file is None

    def test_level_normalized(self):
        """Levels are accepted in any case."""
        assert LoggingConfig(level="debug").level == "DEBUG"

    def test_invalid_level(self):
        """Unknown levels are rejected."""
        with pytest.raises(ValueError):
            LoggingConfig(level="CHATTY")

    def test_invalid_format(self):
        """Only json and text formats exist."""
        with pytest.raises(ValueError):
            LoggingConfig(format="xml")


class TestAnnihilatorPolicyConfig:
    """Test the localization search settings."""

    def test_policy_carries_seed(self):
        """The global seed reaches the policy."""
        policy = AnnihilatorPolicyConfig(random_forms=4).policy(seed=11)

        assert policy.seed == 11
        assert policy.random_forms == 4
        assert policy.power_bound is None

    def test_power_bound_positive(self):
        """A power bound of zero would try nothing."""
        with pytest.raises(ValueError):
            AnnihilatorPolicyConfig(power_bound=0)


class TestCheckerConfig:
    """Test CheckerConfig class."""

    def test_default_values(self):
        """Test default configuration values."""
        config = CheckerConfig()

        assert config.degree_bound == 10
        assert config.seed == 0
        assert config.report_format == "text"
        assert config.localization.isotropy_weights is True

    def test_negative_degree_bound(self):
        """Degree bounds start at zero."""
        with pytest.raises(ValueError):
            CheckerConfig(degree_bound=-1)

    def test_report_format(self):
        """Report formats are normalized and validated."""
        assert CheckerConfig(report_format="JSON").report_format == "json"
        with pytest.raises(ValueError):
            CheckerConfig(report_format="html")

    def test_annihilator_policy(self):
        """The policy combines the search settings with the seed."""
        config = CheckerConfig(seed=5, localization={"power_bound": 3})
        policy = config.annihilator_policy()

        assert policy.seed == 5
        assert policy.resolved_power_bound(10) == 3

    def test_validate_configuration_clean(self):
        """Defaults raise no warnings."""
        assert CheckerConfig().validate_configuration() == []

    def test_validate_configuration_warnings(self):
        """Large bounds and a short power bound are flagged."""
        config = CheckerConfig(degree_bound=40, localization={"power_bound": 2})
        warnings = config.validate_configuration()

        assert any("above 30" in w for w in warnings)
        assert any("power bound" in w for w in warnings)

    def test_to_file_json(self):
        """Test saving configuration to JSON file."""
        config = CheckerConfig(degree_bound=6)
        config.logging.level = "DEBUG"

        with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as f:
            config_path = f.name

        try:
            config.to_file(config_path)

            with open(config_path) as f:
                data = json.load(f)

            assert data["degree_bound"] == 6
            assert data["logging"]["level"] == "DEBUG"

        finally:
            Path(config_path).unlink()

    def test_from_file_yaml(self):
        """Test loading configuration from YAML file."""
        config_data = {
            "degree_bound": 8,
            "report_format": "json",
            "localization": {"random_forms": 2},
        }

        with tempfile.NamedTemporaryFile(mode="w", suffix=".yml", delete=False) as f:
            yaml.dump(config_data, f)
            config_path = f.name

        try:
            config = CheckerConfig.from_file(config_path)

            assert config.degree_bound == 8
            assert config.report_format == "json"
            assert config.localization.random_forms == 2

        finally:
            Path(config_path).unlink()

    def test_from_file_nonexistent(self):
        """Test loading from non-existent file."""
        with pytest.raises(FileNotFoundError):
            CheckerConfig.from_file("/path/that/does/not/exist.json")

    def test_from_file_invalid_json(self):
        """Test loading from invalid JSON file."""
        with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as f:
            f.write("invalid json content")
            config_path = f.name

        try:
            with pytest.raises(InputError, match="Failed to parse configuration file"):
                CheckerConfig.from_file(config_path)
        finally:
            Path(config_path).unlink()


class TestCheckerConfigEnvironment:
    """Test CheckerConfig environment variable loading."""

    def test_from_env_basic(self):
        """Top-level settings come from TORUSFIX_ variables."""
        env_vars = {"TORUSFIX_DEGREE_BOUND": "12", "TORUSFIX_SEED": "3"}

        with patch.dict(os.environ, env_vars):
            config = CheckerConfig.from_env()

            assert config.degree_bound == 12
            assert config.seed == 3

    def test_from_env_nested(self):
        """Nested settings are addressed by their flattened names."""
        env_vars = {
            "TORUSFIX_LC_POWER_BOUND": "9",
            "TORUSFIX_LC_ISOTROPY_WEIGHTS": "no",
            "TORUSFIX_LOG_LEVEL": "info",
        }

        with patch.dict(os.environ, env_vars):
            config = CheckerConfig.from_env()

            assert config.localization.power_bound == 9
            assert config.localization.isotropy_weights is False
            assert config.logging.level == "INFO"

    def test_from_env_custom_prefix(self):
        """Test loading with custom environment variable prefix."""
        with patch.dict(os.environ, {"CUSTOM_DEGREE_BOUND": "4"}):
            config = CheckerConfig.from_env(prefix="CUSTOM_")

            assert config.degree_bound == 4

    def test_from_env_invalid_values(self):
        """Test handling of invalid environment variable values."""
        with patch.dict(os.environ, {"TORUSFIX_DEGREE_BOUND": "lots"}):
            with pytest.raises(InputError, match="Invalid value for"):
                CheckerConfig.from_env()


class TestConfigurationManager:
    """Test ConfigurationManager utility class."""

    def test_create_default_config_file(self):
        """Test creating default configuration file."""
        with tempfile.NamedTemporaryFile(suffix=".yml", delete=False) as f:
            config_path = f.name

        try:
            ConfigurationManager.create_default_config_file(config_path)

            config = CheckerConfig.from_file(config_path)
            assert config.degree_bound == 10

        finally:
            Path(config_path).unlink()

    def test_merge_configs(self):
        """Later configurations take precedence."""
        merged = ConfigurationManager.merge_configs(
            CheckerConfig(degree_bound=4), CheckerConfig(degree_bound=6, seed=2)
        )

        assert merged.degree_bound == 6
        assert merged.seed == 2

    def test_merge_configs_empty(self):
        """Test merging with no configurations."""
        assert ConfigurationManager.merge_configs().degree_bound == 10

    def test_apply_overrides_merges_nested_values(self):
        """Nested overrides keep their sibling fields."""
        base = CheckerConfig(degree_bound=4, localization=AnnihilatorPolicyConfig(random_forms=3))
        config = ConfigurationManager.apply_overrides(
            base, {"seed": 5, "localization": {"power_bound": 7}, "logging": {"level": "debug"}}
        )

        assert config.degree_bound == 4
        assert config.seed == 5
        assert config.localization.power_bound == 7
        assert config.localization.random_forms == 3
        assert config.logging.level == "DEBUG"
        assert base.seed == 0

    def test_apply_overrides_empty_returns_same_config(self):
        """No overrides leave the configuration untouched."""
        base = CheckerConfig(degree_bound=4)
        assert ConfigurationManager.apply_overrides(base, {}) is base

    def test_apply_overrides_validates(self):
        """Override values go through the model validators."""
        with pytest.raises(ValueError):
            ConfigurationManager.apply_overrides(CheckerConfig(), {"report_format": "xml"})

    def test_load_config_precedence(self):
        """Environment overrides the file; other file values survive."""
        config_data = {"degree_bound": 6, "seed": 9}

        with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as f:
            json.dump(config_data, f)
            config_path = f.name

        try:
            with patch.dict(os.environ, {"TORUSFIX_DEGREE_BOUND": "14"}):
                config = ConfigurationManager.load_config(config_file=config_path, use_env=True)

                assert config.degree_bound == 14
                assert config.seed == 9

        finally:
            Path(config_path).unlink()

    def test_load_config_ignores_env_when_asked(self):
        """use_env=False keeps the file values."""
        with patch.dict(os.environ, {"TORUSFIX_DEGREE_BOUND": "14"}):
            config = ConfigurationManager.load_config(use_env=False)

            assert config.degree_bound == 10


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
