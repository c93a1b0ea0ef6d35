"""ISAC sensing exception hierarchy.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

Every error carries its keyword context both as attributes and in
``context`` so the CLI can report provenance without parsing messages.
"""

from __future__ import annotations


class FlextIsacSenseError(Exception):
    """Base error for the ISAC sensing toolkit."""

    prefix: str = "ISAC sense"

    def __init__(self, message: str = "ISAC sense error", **context: object) -> None:
        """Initialize error with free-form keyword context."""
        super().__init__(f"{self.prefix}: {message}")
        self.message = message
        self.context: dict[str, object] = dict(context)
        for key, value in context.items():
            setattr(self, key, value)


class FlextIsacSenseValidationError(FlextIsacSenseError):
    """Invariant or precondition violation, optionally naming the field path."""

    prefix = "ISAC sense validation"

    def __init__(
        self,
        message: str = "validation failed",
        field_path: str | None = None,
        **kwargs: object,
    ) -> None:
        """Initialize validation error with the offending field path."""
        context = kwargs.copy()
        if field_path is not None:
            context["field_path"] = field_path
            message = f"{field_path}: {message}"
        super().__init__(message, **context)
        self.field_path = field_path


class FlextIsacSenseConfigurationError(FlextIsacSenseError):
    """System configuration that cannot be evaluated (e.g. unsupported numerology)."""

    prefix = "ISAC sense configuration"


class FlextIsacSenseParseError(FlextIsacSenseError):
    """Document parsing errors with file and line context."""

    prefix = "ISAC sense parse"

    def __init__(
        self,
        message: str = "document parsing failed",
        file_path: str | None = None,
        line_number: int | None = None,
        column: int | None = None,
        **kwargs: object,
    ) -> None:
        """Initialize parse error with location context."""
        context = kwargs.copy()
        location = ""
        if file_path is not None:
            context["file_path"] = file_path
            location = file_path
        if line_number is not None:
            context["line_number"] = line_number
            location = f"{location}:{line_number}"
        if column is not None:
            context["column"] = column
            location = f"{location}:{column}"
        if location:
            message = f"{location}: {message}"
        super().__init__(message, **context)


class FlextIsacSenseProcessingError(FlextIsacSenseError):
    """Numerical evaluation failures, tagged with the originating module."""

    prefix = "ISAC sense processing"

    def __init__(
        self,
        message: str = "processing failed",
        module: str | None = None,
        **kwargs: object,
    ) -> None:
        """Initialize processing error with module provenance."""
        context = kwargs.copy()
        if module is not None:
            context["module"] = module
            message = f"[{module}] {message}"
        super().__init__(message, **context)


class FlextIsacSenseSteeringError(FlextIsacSenseProcessingError):
    """Angle inversion outside the arcsine domain (end-fire degeneracy)."""

    prefix = "ISAC sense steering"


class FlextIsacSenseDetectionError(FlextIsacSenseProcessingError):
    """Too many Monte Carlo trials without a detection of the reference target."""

    prefix = "ISAC sense detection"

    def __init__(
        self,
        message: str = "insufficient detections",
        miss_rate: float | None = None,
        trials: int | None = None,
        **kwargs: object,
    ) -> None:
        """Initialize detection error with the observed miss rate."""
        context = kwargs.copy()
        if miss_rate is not None:
            context["miss_rate"] = miss_rate
            message = f"{message} (miss rate {miss_rate:.1%})"
        if trials is not None:
            context["trials"] = trials
        super().__init__(message, module="periodogram-sim", **context)


__all__: list[str] = [
    "FlextIsacSenseConfigurationError",
    "FlextIsacSenseDetectionError",
    "FlextIsacSenseError",
    "FlextIsacSenseParseError",
    "FlextIsacSenseProcessingError",
    "FlextIsacSenseSteeringError",
    "FlextIsacSenseValidationError",
]
