"""
Centralized logging manager for torusfix.

Installs a stderr console handler (JSON or text) and an optional rotating file
handler from a LoggingConfig. Nothing is ever written to stdout, which carries
only reports.
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

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import List, Optional

from ..config.checker_config import LoggingConfig
from .json_formatter import TorusfixJSONFormatter

TEXT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

COMPONENT_LOGGERS = [
    "torusfix.core",
    "torusfix.graphs",
    "torusfix.circle",
    "torusfix.system",
    "torusfix.cli",
]


class TorusfixLoggingManager:
    """Owns the handlers installed on the torusfix logger."""

    def __init__(self, config: Optional[LoggingConfig] = None):
        self.config = config or LoggingConfig()
        self.log_level = getattr(logging, self.config.level)
        self.handlers: List[logging.Handler] = []
        self.configured = False

    def _formatter(self) -> logging.Formatter:
        if self.config.format == "json":
            return TorusfixJSONFormatter()
        return logging.Formatter(TEXT_FORMAT)

    def setup_logging(self, stream=None) -> None:
        if self.configured:
            return

        root = logging.getLogger("torusfix")
        root.setLevel(self.log_level)
        root.propagate = False

        console_handler = logging.StreamHandler(stream or sys.stderr)
        console_handler.setFormatter(self._formatter())
        console_handler.setLevel(self.log_level)
        self.handlers.append(console_handler)

        if self.config.output_file:
            output_path = Path(self.config.output_file)
            output_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                filename=str(output_path),
                maxBytes=self.config.max_file_size_mb * 1024 * 1024,
                backupCount=self.config.backup_count,
                encoding="utf-8",
            )
            file_handler.setFormatter(self._formatter())
            file_handler.setLevel(self.log_level)
            self.handlers.append(file_handler)

        for handler in self.handlers:
            root.addHandler(handler)

        for logger_name in COMPONENT_LOGGERS:
            component = logging.getLogger(logger_name)
            component.setLevel(self.log_level)
            component.propagate = True

        self.configured = True
        logging.getLogger("torusfix.logging").debug(
            "torusfix logging initialized",
            extra={
                "log_level": logging.getLevelName(self.log_level),
                "format_type": self.config.format,
                "output_file": self.config.output_file,
            },
        )

    def shutdown(self) -> None:
        """Detach and close the handlers this manager installed."""
        root = logging.getLogger("torusfix")
        for handler in self.handlers:
            root.removeHandler(handler)
            handler.close()
        self.handlers = []
        self.configured = False


_logging_manager: Optional[TorusfixLoggingManager] = None


def setup_torusfix_logging(config: Optional[LoggingConfig] = None, stream=None) -> TorusfixLoggingManager:
    """Replace the global manager with one built from config and install its handlers."""
    global _logging_manager

    if _logging_manager is not None:
        _logging_manager.shutdown()
    _logging_manager = TorusfixLoggingManager(config)
    _logging_manager.setup_logging(stream)
    return _logging_manager


def shutdown_torusfix_logging() -> None:
    global _logging_manager

    if _logging_manager:
        _logging_manager.shutdown()
        _logging_manager = None
