"""
converse/logging.py - Structured logging for derivation sessions

Reports go to stdout; every log record goes to stderr, one JSON object per
line in the default format.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional, TextIO

TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


class JSONFormatter(logging.Formatter):
    """One JSON object per record, with the bound session context merged in"""

    def format(self, record: logging.LogRecord) -> str:
        entry: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        entry.update(getattr(record, "context", {}))
        entry.update(getattr(record, "fields", {}))

        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)

        return json.dumps(entry, default=str)


class TextFormatter(logging.Formatter):
    """Plain lines with the context appended as key=value pairs"""

    def __init__(self):
        super().__init__(TEXT_FORMAT)

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        pairs = {**getattr(record, "context", {}), **getattr(record, "fields", {})}
        if pairs:
            line += " " + " ".join(f"{k}={v}" for k, v in pairs.items())
        return line


def configure_logging(
    level: str = "INFO", fmt: str = "json", stream: Optional[TextIO] = None
) -> logging.Logger:
    root = logging.getLogger()
    root.setLevel(getattr(logging, level.upper(), logging.INFO))
    root.handlers.clear()

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(JSONFormatter() if fmt == "json" else TextFormatter())
    root.addHandler(handler)
    return root


class SessionLogger:
    """Logger bound to one relation store.

    `bind` returns a child carrying extra context (script name, step index)
    so a replay can tag every record without threading arguments through.
    """

    def __init__(self, logger: logging.Logger, session_id: str, level_n: Optional[int] = None, **context):
        self.logger = logger
        self.context: Dict[str, Any] = {"session_id": session_id}
        if level_n is not None:
            self.context["level_n"] = level_n
        self.context.update(context)

    def bind(self, **context) -> "SessionLogger":
        child = SessionLogger.__new__(SessionLogger)
        child.logger = self.logger
        child.context = {**self.context, **context}
        return child

    def log(self, level: int, message: str, **fields) -> None:
        if self.logger.isEnabledFor(level):
            self.logger.log(level, message, extra={"context": self.context, "fields": fields})

    def debug(self, message: str, **fields) -> None:
        self.log(logging.DEBUG, message, **fields)

    def info(self, message: str, **fields) -> None:
        self.log(logging.INFO, message, **fields)

    def warning(self, message: str, **fields) -> None:
        self.log(logging.WARNING, message, **fields)

    def error(self, message: str, **fields) -> None:
        self.log(logging.ERROR, message, **fields)
