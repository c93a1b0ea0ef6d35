"""JSON document processing for system configurations and scenarios.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import NoReturn

from pydantic import BaseModel, ValidationError

from flext_isac_sense.exceptions import (
    FlextIsacSenseParseError,
    FlextIsacSenseValidationError,
)
from flext_isac_sense.loggings import get_logger

logger = get_logger(__name__)

SAMPLES_DIR = Path(__file__).parent / "scenarios"
MAX_DOCUMENT_SIZE_MB = 10


class JsonDocumentProcessor:
    """Read, parse and validate JSON documents into pydantic models."""

    def __init__(self, encoding: str = "utf-8", samples_dir: Path | None = None) -> None:
        """Initialize the processor.

        Args:
            encoding: Text encoding of the documents.
            samples_dir: Directory holding the shipped sample scenarios.

        """
        self.encoding = encoding
        self.samples_dir = samples_dir or SAMPLES_DIR

    def _raise_parse_error(self, msg: str, file_path: Path, **location: int) -> NoReturn:
        raise FlextIsacSenseParseError(msg, file_path=str(file_path), **location)

    def discover_samples(self, file_pattern: str = "*.json") -> list[Path]:
        """List shipped sample documents sorted by name."""
        if not self.samples_dir.is_dir():
            logger.warning("samples directory missing", path=str(self.samples_dir))
            return []
        return sorted(self.samples_dir.glob(file_pattern))

    def sample_names(self) -> list[str]:
        """Names of the shipped samples (file stems)."""
        return [path.stem for path in self.discover_samples()]

    def resolve(self, reference: str | Path) -> Path:
        """Resolve a file path or the name of a shipped sample."""
        path = Path(reference)
        if path.is_file():
            return path
        candidate = self.samples_dir / f"{reference}.json"
        if isinstance(reference, str) and candidate.is_file():
            return candidate
        known = ", ".join(self.sample_names())
        msg = f"no such file or sample (samples: {known})"
        self._raise_parse_error(msg, path)

    def read(self, file_path: Path) -> object:
        """Read and decode one JSON document."""
        logger.debug("reading document", path=str(file_path))
        try:
            size_mb = file_path.stat().st_size / (1024 * 1024)
        except OSError as exc:
            self._raise_parse_error(f"cannot access file: {exc.strerror}", file_path)
        if size_mb > MAX_DOCUMENT_SIZE_MB:
            self._raise_parse_error(
                f"document larger than {MAX_DOCUMENT_SIZE_MB} MB",
                file_path,
            )
        try:
            content = file_path.read_text(encoding=self.encoding)
        except (OSError, UnicodeDecodeError) as exc:
            self._raise_parse_error(f"cannot read file: {exc}", file_path)
        try:
            return json.loads(content)
        except json.JSONDecodeError as exc:
            self._raise_parse_error(
                exc.msg,
                file_path,
                line_number=exc.lineno,
                column=exc.colno,
            )

    def load_model[M: BaseModel](self, reference: str | Path, model: type[M]) -> M:
        """Read a document and validate it against ``model``."""
        file_path = self.resolve(reference)
        data = self.read(file_path)
        try:
            return model.model_validate(data)
        except ValidationError as exc:
            raise self.validation_error(exc, source=str(file_path)) from exc

    @staticmethod
    def validation_error(
        exc: ValidationError | ValueError,
        source: str | None = None,
    ) -> FlextIsacSenseValidationError:
        """Convert a pydantic error into a field-path validation error."""
        if isinstance(exc, ValidationError) and exc.errors():
            first = exc.errors()[0]
            field_path = ".".join(str(part) for part in first["loc"]) or None
            message = first["msg"]
        else:
            field_path = None
            message = str(exc)
        return FlextIsacSenseValidationError(message, field_path=field_path, source=source)


__all__: list[str] = ["SAMPLES_DIR", "JsonDocumentProcessor"]
