"""
JSON logging formatter for torusfix.

One compact JSON object per record, carrying the `extra` fields the checkers attach
(degree, node, pair, dimensions).
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
import logging
from datetime import datetime, timezone
from typing import Any, Dict, Optional

# attributes every LogRecord has; anything else on a record came in through `extra`
_RECORD_FIELDS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime", "taskName"}


class TorusfixJSONFormatter(logging.Formatter):
    """
    JSON formatter for torusfix log records.

    Degree loops pass their state as extras (degree, node, pair, ...); those land as
    top-level keys next to the fixed fields.

    Args:
        prefix: Value of the "prefix" field; defaults to torusfix::log
        include_extra: Whether to include extra fields from log records
    """

    def __init__(self, prefix: Optional[str] = None, include_extra: bool = True):
        super().__init__()
        self.prefix = prefix or "torusfix::log"
        self.include_extra = include_extra

    def format(self, record: logging.LogRecord) -> str:
        entry: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "prefix": self.prefix,
            "module": record.module,
            "line": record.lineno,
        }
        if record.funcName not in (None, "<module>"):
            entry["function"] = record.funcName
        if self.include_extra:
            entry.update(extra_fields(record))
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, separators=(",", ":"), default=str)


def extra_fields(record: logging.LogRecord) -> Dict[str, Any]:
    """Fields a caller attached through `extra`, skipping empty values."""
    return {
        key: value
        for key, value in vars(record).items()
        if key not in _RECORD_FIELDS and not key.startswith("_") and value not in (None, "")
    }

