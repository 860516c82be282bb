"""
Structured logging for polydec.

structlog on top of the standard logging module. Console lines by default,
JSON lines when POLYDEC_LOG_JSON is set. Everything goes to stderr; stdout is
reserved for command results so that `polydec compute > out.txt` stays clean.
"""

import logging
import sys
from typing import Any

import structlog
from structlog.typing import EventDict, WrappedLogger


def render_polynomials(_logger: WrappedLogger, _method: str, event_dict: EventDict) -> EventDict:
    """Replace polynomial values in an event with their text rendering."""
    for key, value in event_dict.items():
        to_text = getattr(value, "to_text", None)
        if callable(to_text):
            event_dict[key] = to_text()
    return event_dict


def setup_logging(level: str = "WARNING", json_output: bool = False) -> None:
    """
    Configure logging for a polydec run.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_output: If True, emit one JSON object per log line
    """
    numeric_level = getattr(logging, level.upper(), logging.WARNING)

    # force: tests and repeated CLI calls reconfigure against a fresh stderr
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=numeric_level,
        force=True,
    )

    shared_processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        render_polynomials,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
    ]

    if json_output:
        renderer = [structlog.processors.format_exc_info, structlog.processors.JSONRenderer()]
    else:
        renderer = [structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())]

    structlog.configure(
        processors=shared_processors + renderer,
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )


def bind_run_context(**context: Any) -> None:
    """Attach key/value pairs to every event logged for the rest of this run."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**context)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger, typically with name=__name__."""
    return structlog.get_logger(name)
