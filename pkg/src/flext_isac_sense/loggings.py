"""Structured logging for flext-isac-sense.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import logging
import sys

import structlog

_LEVELS: dict[str, int] = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
}


def configure_logging(level: str = "warning") -> None:
    """Configure structlog to render key-value events on stderr.

    Args:
        level: Minimum level name (debug, info, warning, error, critical).

    """
    numeric = _LEVELS.get(level.lower())
    if numeric is None:
        msg = f"Unknown log level: {level}"
        raise ValueError(msg)
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.typing.FilteringBoundLogger:
    """Return a module logger bound to its dotted name."""
    logger: structlog.typing.FilteringBoundLogger = structlog.get_logger(logger=name)
    return logger


__all__: list[str] = ["configure_logging", "get_logger"]
