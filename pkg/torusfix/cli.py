#!/usr/bin/env python3
"""
Command-line interface for torusfix.

Every checker reads one JSON or YAML input file and writes a deterministic text or
JSON report to stdout. Logs go to stderr.

Exit codes: 0 when the check ran (negative verdicts included), 1 for invalid input,
2 for an internal invariant breach.
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

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from . import __version__
from .config import CheckerConfig, ConfigurationManager
from .errors import InputError, InvariantViolation
from .fixtures import fixture_names, write_fixture
from .io import load_algebra, load_criterion, load_graph, load_system
from .logging import setup_torusfix_logging, shutdown_torusfix_logging
from .reports import (
    circle_report,
    criterion_report,
    fixtures_report,
    gkm_report,
    graph_cohomology_report,
    graph_realizable_report,
    render,
    system_report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors, not invariant breaches."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="torusfix",
        description="Realizability checks for torus-equivariant cohomology data",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  torusfix fixtures all --output-dir fixtures      # Write the bundled inputs
  torusfix graph-realizable s6_graph.json          # Parallel-class forest test
  torusfix graph-cohomology g.json --degree-bound 8
  torusfix circle-realizable ac_2.json             # Split-semisimple test
  torusfix system-check s6_system.json --format json
  torusfix criterion-check ac_criterion_1.json
        """,
    )
    parser.add_argument("--version", action="version", version=f"torusfix {__version__}")
    parser.add_argument("--config", help="JSON or YAML configuration file")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Set logging level",
    )
    parser.add_argument("--log-format", choices=["json", "text"], help="Set log output format")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-bound", type=int, help="Cohomological degree bound D")
    common.add_argument("--format", choices=["text", "json"], help="Report format")
    common.add_argument("--seed", type=int, help="Seed for randomized choices")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    for name, help_text in (
        ("graph-cohomology", "Hilbert function, generators and freeness of a T-graph"),
        ("graph-realizable", "Parallel-class forest test for a T-graph"),
        ("gkm-validate", "GKM axiom check for a T-graph"),
        ("circle-realizable", "Realizability of a circle algebra"),
        ("criterion-check", "Realizability criterion for subspace-indexed algebras"),
    ):
        sub = subparsers.add_parser(name, help=help_text, parents=[common])
        sub.add_argument("input", help="Input file")

    system_parser = subparsers.add_parser(
        "system-check", help="Validate a system and check its realization conditions", parents=[common]
    )
    system_parser.add_argument("input", help="Input file")
    system_parser.add_argument("--lc-power-bound", type=int, help="Largest multiplier degree in LC searches")

    fixtures_parser = subparsers.add_parser("fixtures", help="Write bundled input files", parents=[common])
    fixtures_parser.add_argument("name", help=f"One of: {', '.join(fixture_names())}")
    fixtures_parser.add_argument("--output-dir", default=".", help="Directory to write into")
    return parser


def _effective_config(args: argparse.Namespace) -> CheckerConfig:
    config = ConfigurationManager.load_config(args.config)
    overrides: Dict[str, Any] = {}
    if getattr(args, "degree_bound", None) is not None:
        overrides["degree_bound"] = args.degree_bound
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "format", None) is not None:
        overrides["report_format"] = args.format
    if getattr(args, "lc_power_bound", None) is not None:
        overrides["localization"] = {"power_bound": args.lc_power_bound}
    logging_overrides = {}
    if args.log_level:
        logging_overrides["level"] = args.log_level
    if args.log_format:
        logging_overrides["format"] = args.log_format
    if logging_overrides:
        overrides["logging"] = logging_overrides
    return ConfigurationManager.apply_overrides(config, overrides)


def _run_fixtures(args: argparse.Namespace, config: CheckerConfig) -> Dict[str, Any]:
    return fixtures_report([str(path) for path in write_fixture(args.name, args.output_dir)])


def _run_system(args: argparse.Namespace, config: CheckerConfig) -> Dict[str, Any]:
    loaded = load_system(args.input)
    return system_report(loaded.system, config.degree_bound, config.annihilator_policy(), loaded.tori)


COMMANDS: Dict[str, Callable[[argparse.Namespace, CheckerConfig], Dict[str, Any]]] = {
    "graph-cohomology": lambda args, config: graph_cohomology_report(load_graph(args.input), config.degree_bound),
    "graph-realizable": lambda args, config: graph_realizable_report(load_graph(args.input)),
    "gkm-validate": lambda args, config: gkm_report(load_graph(args.input)),
    "circle-realizable": lambda args, config: circle_report(load_algebra(args.input)),
    "system-check": _run_system,
    "criterion-check": lambda args, config: criterion_report(
        load_criterion(args.input), config.degree_bound, config.annihilator_policy()
    ),
    "fixtures": _run_fixtures,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one command and print its report; returns the exit code."""
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise InputError("No command given; see torusfix --help")
        config = _effective_config(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    setup_torusfix_logging(config.logging)
    try:
        for warning in config.validate_configuration():
            logger.warning(warning)
        report = COMMANDS[args.command](args, config)
        sys.stdout.write(render(report, config.report_format))
        return EXIT_OK
    except InvariantViolation as exc:
        logger.error("Internal invariant violated", extra={"command": args.command})
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        shutdown_torusfix_logging()


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
