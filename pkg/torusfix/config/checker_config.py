#!/usr/bin/env python3
"""
Configuration classes for the torusfix checkers.

Provides configuration management for degree bounds, localization search policy
and logging.
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
import os
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, Field, field_validator

from ..errors import InputError
from ..system.annihilators import AnnihilatorPolicy

DEFAULT_ENV_PREFIX = "TORUSFIX_"


def _flag(value: str) -> bool:
    return value.lower() in {"1", "true", "yes"}


def _env_mappings(prefix: str) -> Dict[str, Tuple[str, Callable[[str], Any]]]:
    return {
        f"{prefix}DEGREE_BOUND": ("degree_bound", int),
        f"{prefix}SEED": ("seed", int),
        f"{prefix}REPORT_FORMAT": ("report_format", str),
        f"{prefix}LC_POWER_BOUND": ("localization.power_bound", int),
        f"{prefix}LC_RANDOM_FORMS": ("localization.random_forms", int),
        f"{prefix}LC_ISOTROPY_WEIGHTS": ("localization.isotropy_weights", _flag),
        f"{prefix}LOG_LEVEL": ("logging.level", str),
        f"{prefix}LOG_FORMAT": ("logging.format", str),
        f"{prefix}LOG_FILE": ("logging.output_file", str),
    }


def _env_overrides(prefix: str) -> Dict[str, Any]:
    """Only the environment variables that are actually set, as nested dicts."""
    config_data: Dict[str, Any] = {}
    for env_var, (config_key, converter) in _env_mappings(prefix).items():
        value = os.getenv(env_var)
        if value is None:
            continue
        try:
            converted_value = converter(value)
        except (ValueError, TypeError) as e:
            raise InputError(f"Invalid value for {env_var}: {value} ({e})")
        parts = config_key.split(".")
        current = config_data
        for part in parts[:-1]:
            current = current.setdefault(part, {})
        current[parts[-1]] = converted_value
    return config_data


class LoggingConfig(BaseModel):
    """Configuration for torusfix logging. Handlers write to stderr or a file, never stdout."""

    level: str = Field(default="WARNING", description="Logging level")
    format: str = Field(default="text", description="Log format: json or text")
    output_file: Optional[str] = Field(default=None, description="Log output file path")
    max_file_size_mb: int = Field(default=100, ge=1, description="Maximum log file size in MB")
    backup_count: int = Field(default=5, ge=1, description="Number of backup log files to keep")

    @field_validator("level")
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {sorted(valid_levels)}")
        return v.upper()

    @field_validator("format")
    @classmethod
    def validate_format(cls, v):
        valid_formats = {"json", "text"}
        if v.lower() not in valid_formats:
            raise ValueError(f"Log format must be one of: {sorted(valid_formats)}")
        return v.lower()


class AnnihilatorPolicyConfig(BaseModel):
    """Candidate forms and power bound of the localization search."""

    power_bound: Optional[int] = Field(
        default=None, ge=1, description="Largest multiplier degree; defaults to twice the degree bound"
    )
    random_forms: int = Field(default=8, ge=0, description="Seeded random integer forms")
    coefficient_range: int = Field(default=3, ge=1, description="Random coefficients lie in [-r, r]")
    pairwise_sums: bool = Field(default=True, description="Add sums of complement basis forms")
    isotropy_weights: bool = Field(default=True, description="Add isotropy weight lines")

    def policy(self, seed: int = 0) -> AnnihilatorPolicy:
        return AnnihilatorPolicy(
            power_bound=self.power_bound,
            random_forms=self.random_forms,
            coefficient_range=self.coefficient_range,
            pairwise_sums=self.pairwise_sums,
            isotropy_weights=self.isotropy_weights,
            seed=seed,
        )


class CheckerConfig(BaseModel):
    """Main configuration class for the checkers."""

    degree_bound: int = Field(default=10, ge=0, description="Cohomological degree bound D")
    seed: int = Field(default=0, description="Seed for all randomized choices")
    report_format: str = Field(default="text", description="Report format: text or json")
    localization: AnnihilatorPolicyConfig = Field(
        default_factory=AnnihilatorPolicyConfig, description="Localization search policy"
    )
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="Logging configuration")

    @field_validator("report_format")
    @classmethod
    def validate_report_format(cls, v):
        if v.lower() not in {"json", "text"}:
            raise ValueError("Report format must be json or text")
        return v.lower()

    @classmethod
    def from_file(cls, config_path: Union[str, Path]) -> "CheckerConfig":
        """Load configuration from a JSON or YAML file."""
        path = Path(config_path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        content = path.read_text(encoding="utf-8")

        try:
            if path.suffix.lower() in [".yml", ".yaml"]:
                data = yaml.safe_load(content)
            else:
                data = json.loads(content)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise InputError(f"Failed to parse configuration file: {e}")

        return cls(**(data or {}))

    @classmethod
    def from_env(cls, prefix: str = DEFAULT_ENV_PREFIX) -> "CheckerConfig":
        """Configuration with only the set environment variables applied over defaults."""
        return cls(**_env_overrides(prefix))

    def to_file(self, config_path: Union[str, Path], format: str = "auto") -> None:
        """Save configuration to a file."""
        path = Path(config_path)

        if format == "auto":
            format = "yaml" if path.suffix.lower() in [".yml", ".yaml"] else "json"

        data = self.model_dump()

        if format == "yaml":
            content = yaml.dump(data, default_flow_style=False, sort_keys=False, indent=2)
        else:
            content = json.dumps(data, indent=2)

        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")

    def annihilator_policy(self) -> AnnihilatorPolicy:
        return self.localization.policy(self.seed)

    def validate_configuration(self) -> List[str]:
        """Validate the configuration and return any warnings."""
        warnings = []

        if self.degree_bound > 30:
            warnings.append("Degree bounds above 30 make system checks slow")

        power_bound = self.localization.power_bound
        if power_bound is not None and power_bound < self.degree_bound:
            warnings.append("LC power bound below the degree bound leaves many classes inconclusive")

        if self.localization.random_forms == 0 and not self.localization.pairwise_sums:
            warnings.append("Localization search uses only complement basis forms")

        return warnings


class ConfigurationManager:
    """Utility class for managing configurations."""

    @staticmethod
    def create_default_config_file(path: Union[str, Path], format: str = "yaml") -> None:
        """Create a default configuration file."""
        CheckerConfig().to_file(path, format)

    @staticmethod
    def merge_configs(*configs: CheckerConfig) -> CheckerConfig:
        """Merge multiple configurations, with later configs taking precedence."""
        if not configs:
            return CheckerConfig()

        merged_data = configs[0].model_dump()

        for config in configs[1:]:
            merged_data = ConfigurationManager._deep_merge(merged_data, config.model_dump())

        return CheckerConfig(**merged_data)

    @staticmethod
    def apply_overrides(config: CheckerConfig, overrides: Dict[str, Any]) -> CheckerConfig:
        """A copy of config with the nested override values laid over it; validators run again."""
        if not overrides:
            return config
        return CheckerConfig(**ConfigurationManager._deep_merge(config.model_dump(), overrides))

    @staticmethod
    def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """Deep merge two dictionaries."""
        result = base.copy()

        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = ConfigurationManager._deep_merge(result[key], value)
            else:
                result[key] = value

        return result

    @staticmethod
    def load_config(
        config_file: Optional[Union[str, Path]] = None,
        env_prefix: str = DEFAULT_ENV_PREFIX,
        use_env: bool = True,
    ) -> CheckerConfig:
        """Load configuration from a file and/or environment variables; the environment wins."""
        base_config = CheckerConfig.from_file(config_file) if config_file else CheckerConfig()

        if use_env:
            return ConfigurationManager.apply_overrides(base_config, _env_overrides(env_prefix))

        return base_config
