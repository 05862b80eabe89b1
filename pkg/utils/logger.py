# utils/logger.py
"""
Logging-Funktionalität für FreeGroupLab
Ausgabe auf stderr, damit stdout der CLI reproduzierbar bleibt.
"""
import logging
import sys
from datetime import datetime
from typing import Optional

from config import settings

# Zusätzliche Stufe zwischen INFO und WARNING
SUCCESS = 25
logging.addLevelName(SUCCESS, "SUCCESS")

_ROOT_NAME = "freegrouplab"


class _PrefixFormatter(logging.Formatter):
    """Zeitstempel + Symbol je Stufe"""

    PREFIXES = {
        "DEBUG": "",
        "INFO": "",
        "SUCCESS": "✅ ",
        "ERROR": "❌ ",
        "WARNING": "⚠️ "
    }

    def format(self, record: logging.LogRecord) -> str:
        prefix = self.PREFIXES.get(record.levelname, "")
        message = f"{prefix}{record.getMessage()}"
        if settings.LOG_TIMESTAMPS:
            timestamp = datetime.fromtimestamp(record.created).strftime("%H:%M:%S")
            message = f"[{timestamp}] {message}"
        return message


def configure(level: Optional[str] = None) -> None:
    """Richtet den Handler des Paket-Loggers ein (idempotent)."""
    root = logging.getLogger(_ROOT_NAME)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(_PrefixFormatter())
        root.addHandler(handler)
        root.propagate = False
    root.setLevel((level or settings.LOG_LEVEL).upper())


class Logger:
    def __init__(self, name: str = _ROOT_NAME):
        if name != _ROOT_NAME and not name.startswith(_ROOT_NAME + "."):
            name = f"{_ROOT_NAME}.{name}"
        self._logger = logging.getLogger(name)

    @classmethod
    def for_module(cls, module_name: str) -> "Logger":
        return cls(module_name)

    @property
    def name(self) -> str:
        return self._logger.name

    def log_message(self, message, level="INFO"):
        """Schreibt eine Nachricht mit Zeitstempel auf stderr."""
        numeric = SUCCESS if level == "SUCCESS" else logging.getLevelName(level)
        if not isinstance(numeric, int):
            numeric = logging.INFO
        self._logger.log(numeric, message)

    def debug(self, message):
        self._logger.debug(message)

    def is_debug(self) -> bool:
        return self._logger.isEnabledFor(logging.DEBUG)


configure()
