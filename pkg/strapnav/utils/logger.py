"""Logging for strapnav.

Records may carry the navigation epoch they refer to via ``extra={"epoch": t}``;
both formatters print it as ``t=<seconds>`` so warnings from a long run can be
matched against estimate.csv rows.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, Optional

ROOT = "strapnav"

_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[35m",
}
_RESET = "\033[0m"


def _epoch_tag(record: logging.LogRecord) -> str:
    epoch = getattr(record, "epoch", None)
    return "" if epoch is None else f" t={epoch:.3f}s"


class NavFormatter(logging.Formatter):
    """Short console lines; level coloured only when the stream is a terminal."""

    def __init__(self, stream=None):
        super().__init__()
        self.stream = stream or sys.stderr

    def format(self, record: logging.LogRecord) -> str:
        clock = datetime.fromtimestamp(record.created).strftime("%H:%M:%S")
        level = f"{record.levelname:8s}"
        if self.stream.isatty():
            level = f"{_COLORS.get(record.levelno, '')}{level}{_RESET}"
        module = record.name.rsplit(".", 1)[-1]
        return f"[{clock}] {level} [{module}{_epoch_tag(record)}] {record.getMessage()}"


class FileFormatter(logging.Formatter):
    """Full date and logger name for log files."""

    def format(self, record: logging.LogRecord) -> str:
        stamp = datetime.fromtimestamp(record.created).strftime("%Y-%m-%d %H:%M:%S")
        return f"[{stamp}] {record.levelname:8s} [{record.name}{_epoch_tag(record)}] {record.getMessage()}"


_loggers: Dict[str, logging.Logger] = {}


def get_logger(name: str) -> logging.Logger:
    """Logger under the strapnav namespace (``mech`` -> ``strapnav.mech``)."""
    full_name = name if name == ROOT or name.startswith(f"{ROOT}.") else f"{ROOT}.{name}"
    if full_name not in _loggers:
        _loggers[full_name] = logging.getLogger(full_name)
    return _loggers[full_name]


def setup_logging(level: str = "INFO", log_file: Optional[str] = None, debug: bool = False) -> None:
    """Install the console handler (stderr) and an optional file handler.

    stdout is reserved for the rich summaries printed by the CLI.
    """
    log_level = logging.DEBUG if debug else logging.getLevelName(level.upper())
    if not isinstance(log_level, int):
        log_level = logging.INFO

    root = logging.getLogger(ROOT)
    root.setLevel(log_level)
    root.handlers = []
    root.propagate = False

    handlers = [logging.StreamHandler(sys.stderr)]
    handlers[0].setFormatter(NavFormatter(sys.stderr))
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path, encoding="utf-8"))
        handlers[-1].setFormatter(FileFormatter())
    for handler in handlers:
        handler.setLevel(log_level)
        root.addHandler(handler)


class LoggerMixin:
    """Gives a class a ``self.logger`` named after it."""

    @property
    def logger(self) -> logging.Logger:
        if not hasattr(self, "_logger"):
            self._logger = get_logger(type(self).__name__)
        return self._logger
