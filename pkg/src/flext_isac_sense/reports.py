"""KPI tables and scenario report rendering.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

Every value is recomputed from the configuration; nothing is read back
from published tables.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Callable, Sequence

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.accuracy import AccuracyReport, accuracy_report
from flext_isac_sense.config import BUILTIN_BANDS, SystemConfig, builtin_config
from flext_isac_sense.exceptions import FlextIsacSenseValidationError
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR, max_range_noise, tx_power
from flext_isac_sense.quantities import linear_to_db
from flext_isac_sense.resolution import ResolutionReport, resolution_report, unambiguous_limits
from flext_isac_sense.scenario import KpiReport
from flext_isac_sense.typings import Placement, ReportFormat

ANGULAR_ACCURACY_NOTE = (
    "angular accuracy follows the closed-form NAF bounds; published tables "
    "for the built-in bands list values about 2π² larger"
)

type _Extractor = Callable[[AccuracyReport, ResolutionReport], float | None]


class KpiRow(BaseModel):
    """One KPI across the requested configurations."""

    model_config = ConfigDict(frozen=True)

    key: str
    label: str
    unit: str
    values: list[float | None]
    flagged: list[bool] = Field(description="Columns carrying the footnote")

    @property
    def footnote(self) -> bool:
        """Whether any column of this row carries the footnote."""
        return any(self.flagged)


class KpiTable(BaseModel):
    """Sensing performance parameters at γ = γ*, boresight."""

    model_config = ConfigDict(frozen=True)

    columns: list[str]
    snr_db: float
    rows: list[KpiRow]
    footnotes: list[str] = Field(default_factory=list)


_ROWS: tuple[tuple[str, str, str, bool, _Extractor], ...] = (
    ("range_accuracy", "σ_r", "m", False, lambda a, _: a.range_m),
    ("speed_accuracy", "σ_s", "m/s", False, lambda a, _: a.speed_mps),
    ("elevation_accuracy", "σ_φ", "deg", True, lambda a, _: a.elevation_std_deg),
    ("azimuth_accuracy", "σ_θ", "deg", True, lambda a, _: a.azimuth_std_deg),
    ("range_resolution", "ρ_r", "m", False, lambda _, r: r.range_m),
    ("speed_resolution", "ρ_s", "m/s", False, lambda _, r: r.speed_mps),
    ("elevation_resolution", "ρ_φ", "deg", False, lambda _, r: r.elevation_res_deg),
    ("azimuth_resolution", "ρ_θ", "deg", False, lambda _, r: r.azimuth_res_deg),
    ("vertical_slope", "ρ_v", "m per m", False, lambda _, r: r.vertical_slope),
    ("horizontal_slope", "ρ_h", "m per m", False, lambda _, r: r.horizontal_slope),
    ("unambiguous_range", "r_u", "m", False, lambda _, r: r.unambiguous_range_m),
    ("unambiguous_speed", "s_u", "m/s", False, lambda _, r: r.unambiguous_speed_mps),
)


def _is_builtin(cfg: SystemConfig) -> bool:
    return cfg.band in BUILTIN_BANDS and cfg == builtin_config(cfg.band)


def build_kpi_table(
    configs: Sequence[SystemConfig],
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> KpiTable:
    """Evaluate the KPI rows for every configuration."""
    if not configs:
        msg = "at least one configuration is required"
        raise FlextIsacSenseValidationError(msg, field_path="band")
    reports = [
        (accuracy_report(cfg, gamma_star, gamma_star=gamma_star), resolution_report(cfg))
        for cfg in configs
    ]
    builtin = [_is_builtin(cfg) for cfg in configs]
    rows = [
        KpiRow(
            key=key,
            label=label,
            unit=unit,
            values=[extract(acc, res) for acc, res in reports],
            flagged=[footnote and flag for flag in builtin],
        )
        for key, label, unit, footnote, extract in _ROWS
    ]
    return KpiTable(
        columns=[cfg.band for cfg in configs],
        snr_db=linear_to_db(gamma_star),
        rows=rows,
        footnotes=[ANGULAR_ACCURACY_NOTE] if any(builtin) else [],
    )


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.4g}"


def _markdown_table(table: KpiTable) -> str:
    lines = [
        f"Sensing performance parameters at SNR = {table.snr_db:.1f} dB (boresight)",
        "",
        "| KPI | unit | " + " | ".join(table.columns) + " |",
        "|---|---|" + "---|" * len(table.columns),
    ]
    for row in table.rows:
        cells = " | ".join(
            f"{_fmt(v)}†" if mark else _fmt(v)
            for v, mark in zip(row.values, row.flagged, strict=True)
        )
        lines.append(f"| {row.label} | {row.unit} | {cells} |")
    lines.extend(f"\n† {note}" for note in table.footnotes)
    return "\n".join(lines) + "\n"


def _csv_table(table: KpiTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["kpi", "unit", *table.columns])
    for row in table.rows:
        writer.writerow(
            [row.key, row.unit, *("" if v is None else repr(v) for v in row.values)],
        )
    return buffer.getvalue()


def render_kpi_table(table: KpiTable, fmt: ReportFormat = "md") -> str:
    """Render a KPI table as Markdown, CSV or JSON."""
    if fmt == "md":
        return _markdown_table(table)
    if fmt == "csv":
        return _csv_table(table)
    return table.model_dump_json(indent=2) + "\n"


def kpi_table(
    configs: Sequence[SystemConfig],
    fmt: ReportFormat = "md",
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> str:
    """KPI table document for the given configurations."""
    return render_kpi_table(build_kpi_table(configs, gamma_star), fmt)


RANGE_TABLE_OBJECTS: tuple[tuple[Placement, str, float], ...] = (
    ("outdoor", "drone", 0.1),
    ("outdoor", "human", 1.0),
    ("outdoor", "car", 100.0),
    ("indoor", "drone", 0.1),
    ("indoor", "human", 1.0),
    ("indoor", "agv", 2.0),
)


class RangeRow(BaseModel):
    """Noise-limited range of one object across the requested configurations."""

    model_config = ConfigDict(frozen=True)

    placement: Placement
    name: str
    rcs_m2: float = Field(gt=0.0, description="RCS Ψ [m²]")
    values: list[float] = Field(description="r_n* per configuration [m]")


class RangeTable(BaseModel):
    """Thermal-noise range limits of typical objects at γ = γ*."""

    model_config = ConfigDict(frozen=True)

    columns: list[str]
    snr_db: float
    rows: list[RangeRow]
    unambiguous_m: list[float] = Field(description="r_u* per configuration [m]")


def build_range_table(
    configs: Sequence[SystemConfig],
    gamma_star: float = DEFAULT_GAMMA_STAR,
    objects: Sequence[tuple[Placement, str, float]] = RANGE_TABLE_OBJECTS,
) -> RangeTable:
    """Evaluate r_n* for every object, placement and configuration."""
    if not configs:
        msg = "at least one configuration is required"
        raise FlextIsacSenseValidationError(msg, field_path="band")
    rows = [
        RangeRow(
            placement=placement,
            name=name,
            rcs_m2=rcs,
            values=[
                max_range_noise(cfg, rcs, tx_power(cfg, placement), gamma_star)
                for cfg in configs
            ],
        )
        for placement, name, rcs in objects
    ]
    return RangeTable(
        columns=[cfg.band for cfg in configs],
        snr_db=linear_to_db(gamma_star),
        rows=rows,
        unambiguous_m=[unambiguous_limits(cfg).range_m for cfg in configs],
    )


def _markdown_range_table(table: RangeTable) -> str:
    lines = [
        f"Max. range due to thermal noise at SNR = {table.snr_db:.1f} dB",
        "",
        "| placement | object | Ψ [m²] | "
        + " | ".join(f"{band} [km]" for band in table.columns)
        + " |",
        "|---|---|---|" + "---|" * len(table.columns),
    ]
    for row in table.rows:
        cells = " | ".join(f"{value / 1e3:.2f}" for value in row.values)
        lines.append(f"| {row.placement} | {row.name} | {row.rcs_m2:g} | {cells} |")
    cells = " | ".join(f"{value / 1e3:.2f}" for value in table.unambiguous_m)
    lines.append(f"| any | r_u* | | {cells} |")
    return "\n".join(lines) + "\n"


def render_range_table(table: RangeTable, fmt: ReportFormat = "md") -> str:
    """Render a range table as Markdown (km), CSV (m) or JSON (m)."""
    if fmt == "md":
        return _markdown_range_table(table)
    if fmt == "json":
        return table.model_dump_json(indent=2) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["placement", "object", "rcs_m2", *table.columns])
    for row in table.rows:
        writer.writerow(
            [row.placement, row.name, repr(row.rcs_m2), *(repr(v) for v in row.values)],
        )
    writer.writerow(["any", "unambiguous_range", "", *(repr(v) for v in table.unambiguous_m)])
    return buffer.getvalue()


def range_table(
    configs: Sequence[SystemConfig],
    fmt: ReportFormat = "md",
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> str:
    """Noise-limited range table document for the given configurations."""
    return render_range_table(build_range_table(configs, gamma_star), fmt)


def _flatten(value: object, prefix: str = "") -> list[tuple[str, object]]:
    if isinstance(value, dict):
        items: list[tuple[str, object]] = []
        for key, child in value.items():
            items.extend(_flatten(child, f"{prefix}.{key}" if prefix else str(key)))
        return items
    if isinstance(value, list) and value and isinstance(value[0], dict):
        items = []
        for index, child in enumerate(value):
            items.extend(_flatten(child, f"{prefix}.{index}"))
        return items
    if isinstance(value, list):
        return [(prefix, "; ".join(str(v) for v in value))]
    return [(prefix, value)]


def _markdown_report(report: KpiReport) -> str:
    verdict = report.verdict
    limits = report.limits
    lines = [
        f"# {report.scenario}",
        "",
        f"- band: {report.band} ({report.placement}, P_T = {report.tx_power_w:.4g} W)",
        f"- target: {report.target.name}, Ψ = {report.target.rcs_m2:g} m², "
        f"r = {report.target.range_m:g} m",
        f"- target SNR: {linear_to_db(report.target_snr.snr):.2f} dB",
        "",
        "## Range limits",
        "",
        "| limit | value [m] |",
        "|---|---|",
        f"| noise | {_fmt(limits.noise_m)} |",
        f"| quantization | {_fmt(limits.quantization_m)} |",
        f"| resolution | {_fmt(limits.resolution_m)} |",
        f"| ambiguity | {_fmt(limits.ambiguity_m)} |",
        f"| **achievable** | **{_fmt(limits.achievable_m)}** ({report.binding}) |",
        "",
        "## Accuracy and resolution at SNR = "
        f"{linear_to_db(report.accuracy.snr):.1f} dB",
        "",
        f"- σ_r = {_fmt(report.accuracy.range_m)} m, "
        f"σ_s = {_fmt(report.accuracy.speed_mps)} m/s",
        f"- σ_φ = {_fmt(report.accuracy.elevation_std_deg)}°, "
        f"σ_θ = {_fmt(report.accuracy.azimuth_std_deg)}°",
        f"- ρ_r = {_fmt(report.resolution.range_m)} m, "
        f"ρ_s = {_fmt(report.resolution.speed_mps)} m/s",
        f"- ρ_v = {_fmt(report.resolution.vertical_m)} m, "
        f"ρ_h = {_fmt(report.resolution.horizontal_m)} m at the target range",
        "",
        "## Verdict",
        "",
    ]
    if verdict.required_range_m is None:
        lines.append("feasible (no required range)")
    elif verdict.feasible:
        lines.append(
            f"feasible at {verdict.required_range_m:g} m "
            f"(r* = {verdict.achievable_m:.2f} m)",
        )
    else:
        lines.append(f"infeasible: {verdict.reason}")
    if report.reference_note:
        lines.extend(["", f"reference: {report.reference_note}"])
    if report.warnings:
        lines.extend(["", "## Warnings", ""])
        lines.extend(f"- {warning}" for warning in report.warnings)
    return "\n".join(lines) + "\n"


def render_report(report: KpiReport, fmt: ReportFormat = "md") -> str:
    """Render a scenario report as Markdown, CSV (flattened key/value) or JSON."""
    if fmt == "md":
        return _markdown_report(report)
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    data = json.loads(report.model_dump_json())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["field", "value"])
    for key, value in _flatten(data):
        writer.writerow([key, "" if value is None else value])
    return buffer.getvalue()


__all__: list[str] = [
    "ANGULAR_ACCURACY_NOTE",
    "RANGE_TABLE_OBJECTS",
    "KpiRow",
    "KpiTable",
    "RangeRow",
    "RangeTable",
    "build_kpi_table",
    "build_range_table",
    "kpi_table",
    "range_table",
    "render_kpi_table",
    "render_range_table",
    "render_report",
]
