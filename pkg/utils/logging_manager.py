# -*- coding: utf-8 -*-
"""
Logging setup for the anonymization toolkit.

The `logging` section of the configuration is turned into a dictConfig
document. Console output is plain text by default and JSON lines when
`logging.json` is set; the optional log file is always JSON.
"""

import copy
import json
import logging
import logging.config
import os
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

DEFAULT_LOGGING_CONFIG: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
        },
        "json": {
            "()": "utils.logging_manager.JsonFormatter"
        }
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "DEBUG",
            "formatter": "standard",
            "stream": "ext://sys.stderr"
        }
    },
    "loggers": {
        "": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": True
        }
    }
}


def build_logging_config(settings: Optional[Dict[str, Any]] = None, log_level: Optional[str] = None) -> Dict[str, Any]:
    """
    Build a dictConfig document from the ``logging`` section of the toolkit config.

    Recognised keys: ``level``, ``json`` (JSON lines on the console), ``file``
    (rotating JSON log file), ``max_bytes``, ``backup_count``.

    Args:
        settings: The ``logging`` section of the merged configuration.
        log_level: Override for the root level (from ``--log-level``).
    """
    settings = settings or {}
    config = copy.deepcopy(DEFAULT_LOGGING_CONFIG)
    root = config["loggers"][""]

    if settings.get("level"):
        root["level"] = str(settings["level"]).upper()
    if settings.get("json"):
        config["handlers"]["console"]["formatter"] = "json"

    log_file = settings.get("file")
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        config["handlers"]["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": "DEBUG",
            "formatter": "json",
            "filename": log_file,
            "maxBytes": int(settings.get("max_bytes", 10485760)),  # 10 MB
            "backupCount": int(settings.get("backup_count", 5)),
            "encoding": "utf-8"
        }
        root["handlers"].append("file")

    if log_level:
        root["level"] = log_level.upper()
    return config


def setup_logging(settings: Optional[Dict[str, Any]] = None, log_level: Optional[str] = None) -> None:
    """
    Configure logging for the toolkit.

    Args:
        settings: The ``logging`` section of the merged configuration
        log_level: Override for log level
    """
    config = build_logging_config(settings, log_level)
    try:
        logging.config.dictConfig(config)
        logger.debug("Logging configured successfully")
    except (ValueError, TypeError, AttributeError, ImportError) as e:
        logging.basicConfig(
            level=logging.INFO,
            format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            handlers=[logging.StreamHandler(sys.stderr)]
        )
        logger.warning(f"Falling back to basic logging configuration: {str(e)}")


# Attributes a LogRecord always carries; anything else came in through ``extra``.
_RECORD_FIELDS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


class JsonFormatter(logging.Formatter):
    """
    One JSON object per line.

    Job context (``job_id``, ``task``) and event fields passed through
    ``extra`` become top-level keys next to the message.
    """

    def format(self, record):
        entry = {
            "time": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "where": f"{record.module}.{record.funcName}:{record.lineno}",
        }
        entry.update({k: v for k, v in vars(record).items() if k not in _RECORD_FIELDS})
        if record.exc_info:
            entry["error"] = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "traceback": self.formatException(record.exc_info),
            }
        return json.dumps(entry, default=str, ensure_ascii=False)


class JobLoggerAdapter(logging.LoggerAdapter):
    """Stamps every record with the job it belongs to."""

    def process(self, msg, kwargs):
        kwargs["extra"] = {**self.extra, **kwargs.get("extra", {})}
        return msg, kwargs


def get_logger(name: str, **context) -> JobLoggerAdapter:
    """Logger for ``name`` whose records carry ``context`` (``job_id``, ``task``)."""
    return JobLoggerAdapter(logging.getLogger(name), context)


def log_job_event(event_type: str, job_id: Optional[str] = None, task: Optional[str] = None,
                  details: Optional[Dict[str, Any]] = None) -> None:
    """
    Emit a lifecycle event (``job_start``, ``job_complete``, ``job_failed``) on the
    ``anonkit.jobs`` logger.
    """
    fields = {"event_type": event_type, "job_id": job_id, "task": task}
    fields.update({k: v for k, v in (details or {}).items() if k not in _RECORD_FIELDS})
    logging.getLogger("anonkit.jobs").info(event_type, extra=fields)
