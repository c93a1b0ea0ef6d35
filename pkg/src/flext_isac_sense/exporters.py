"""Periodogram and detection exports.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.loggings import get_logger
from flext_isac_sense.periodogram import Detection, PeriodogramGrid, PeriodogramMetadata

logger = get_logger(__name__)

_TINY = float(np.finfo(np.float64).tiny)


class ExportMetadata(BaseModel):
    """Companion JSON document of an exported periodogram."""

    model_config = ConfigDict(frozen=True)

    periodogram: PeriodogramMetadata
    seed: int
    trial: int = 0
    band: str
    scenario: str | None = None
    power_unit: str = "dB relative to the thermal noise floor"


class DetectionRecords(BaseModel):
    """Detections export document."""

    model_config = ConfigDict(frozen=True)

    count: int = Field(ge=0)
    detections: list[Detection]


class PeriodogramExporter:
    """Write periodogram CSV, metadata JSON and detections JSON."""

    def __init__(self, output_dir: Path | None = None) -> None:
        """Initialize the exporter.

        Args:
            output_dir: Directory prefixed to relative output prefixes.

        """
        self.output_dir = output_dir

    def _path(self, prefix: str, suffix: str) -> Path:
        base = Path(f"{prefix}{suffix}")
        if self.output_dir is not None and not base.is_absolute():
            base = self.output_dir / base
        base.parent.mkdir(parents=True, exist_ok=True)
        return base

    @staticmethod
    def csv_text(pgm: PeriodogramGrid) -> str:
        """Header with the bin mapping, then one row of dB power per range bin."""
        meta = pgm.metadata
        header = ",".join(
            [
                f"axes={meta.axes}",
                f"range_bin_m={meta.range_bin_m!r}",
                f"{meta.cross_axis}_bin={meta.cross_bin!r}",
                f"cross_center_index={meta.cross_center_index}",
                f"rows={meta.shape[0]}",
                f"cols={meta.shape[1]}",
            ],
        )
        power_db = 10.0 * np.log10(np.maximum(pgm.power, _TINY))
        buffer = io.StringIO()
        np.savetxt(buffer, power_db, fmt="%.6f", delimiter=",", header=header, comments="")
        return buffer.getvalue()

    def export(
        self,
        prefix: str,
        pgm: PeriodogramGrid,
        detections: list[Detection],
        metadata: ExportMetadata,
    ) -> list[Path]:
        """Write ``<prefix>.csv``, ``<prefix>.json`` and ``<prefix>-detections.json``."""
        csv_path = self._path(prefix, ".csv")
        csv_path.write_text(self.csv_text(pgm), encoding="utf-8")
        meta_path = self._path(prefix, ".json")
        meta_path.write_text(metadata.model_dump_json(indent=2) + "\n", encoding="utf-8")
        det_path = self._path(prefix, "-detections.json")
        records = DetectionRecords(count=len(detections), detections=detections)
        det_path.write_text(records.model_dump_json(indent=2) + "\n", encoding="utf-8")
        written = [csv_path, meta_path, det_path]
        logger.info("periodogram exported", files=[str(p) for p in written])
        return written


__all__: list[str] = ["DetectionRecords", "ExportMetadata", "PeriodogramExporter"]
