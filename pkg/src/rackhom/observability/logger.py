"""Structured JSON logging for long-running computations."""

from __future__ import annotations

import json
import logging
import sys
from typing import Any

# Context attributes callers may attach through ``extra=``.
_CONTEXT_FIELDS = ("rack", "theory", "degree", "check")


class JSONFormatter(logging.Formatter):
    """Format log records as JSON."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
        }
        for field_name in _CONTEXT_FIELDS:
            if hasattr(record, field_name):
                log_data[field_name] = getattr(record, field_name)
        if record.exc_info and record.exc_info[1]:
            log_data["error"] = str(record.exc_info[1])
        return json.dumps(log_data)


def get_logger(name: str = "rackhom", json_format: bool = True) -> logging.Logger:
    """Get a configured logger instance."""
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        if json_format:
            handler.setFormatter(JSONFormatter())
        else:
            handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        logger.addHandler(handler)
        logger.setLevel(logging.WARNING)
        logger.propagate = False
    return logger


def set_verbosity(level: int, json_format: bool | None = None) -> None:
    """Set the level of every rackhom logger created so far (CLI -v flags)."""
    root = get_logger("rackhom", json_format=json_format if json_format is not None else True)
    root.setLevel(level)
    for name, existing in logging.Logger.manager.loggerDict.items():
        if name.startswith("rackhom") and isinstance(existing, logging.Logger):
            existing.setLevel(level)
            if json_format is not None:
                for handler in existing.handlers:
                    handler.setFormatter(
                        JSONFormatter()
                        if json_format
                        else logging.Formatter("%(levelname)s: %(message)s")
                    )
