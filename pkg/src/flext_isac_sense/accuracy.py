"""Cramér-Rao accuracy bounds and their mapping to incidence angles.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.config import SystemConfig
from flext_isac_sense.exceptions import (
    FlextIsacSenseSteeringError,
    FlextIsacSenseValidationError,
)
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR
from flext_isac_sense.loggings import get_logger
from flext_isac_sense.models import ClockErrors
from flext_isac_sense.quantities import C0
from flext_isac_sense.system_model import symbols_per_frame

logger = get_logger(__name__)


class NafPair(BaseModel):
    """Normalized angular frequencies across rows (η) and columns (ℓ)."""

    model_config = ConfigDict(frozen=True)

    vertical: float = Field(description="η [cycles/element]")
    horizontal: float = Field(description="ℓ [cycles/element]")


class CrlbAccuracy(BaseModel):
    """Standard-deviation bounds; None where the axis has a single sample."""

    model_config = ConfigDict(frozen=True)

    range_m: float | None = Field(default=None, ge=0.0, description="σ_r [m]")
    speed_mps: float | None = Field(default=None, ge=0.0, description="σ_s [m/s]")
    vertical_naf: float | None = Field(default=None, ge=0.0, description="σ_z")
    horizontal_naf: float | None = Field(default=None, ge=0.0, description="σ_x")


class AngleAccuracy(BaseModel):
    """Angular deviation in degrees at a steering direction."""

    model_config = ConfigDict(frozen=True)

    elevation_deg: float = Field(ge=0.0, description="σ_φ [deg]")
    azimuth_deg: float = Field(ge=0.0, description="σ_θ [deg]")


class AccuracyReport(BaseModel):
    """Every accuracy KPI at one SNR and incidence direction."""

    model_config = ConfigDict(frozen=True)

    snr: float = Field(gt=0.0, description="γ used for the bounds")
    azimuth_deg: float = 0.0
    elevation_deg: float = 0.0
    range_m: float | None = None
    speed_mps: float | None = None
    vertical_naf: float | None = None
    horizontal_naf: float | None = None
    elevation_std_deg: float | None = None
    azimuth_std_deg: float | None = None
    range_clock_m: float | None = None
    speed_clock_mps: float | None = None
    below_detection_snr: bool = False
    warnings: tuple[str, ...] = ()


def _bound(scale: float, samples: int, gamma: float) -> float | None:
    if samples < 2:  # noqa: PLR2004
        return None
    return scale * math.sqrt(6.0 / ((samples**2 - 1) * gamma))


def crlb_accuracy(
    cfg: SystemConfig,
    gamma: float,
    *,
    subcarriers: int | None = None,
    symbols: int | None = None,
    doppler_period_s: float | None = None,
) -> CrlbAccuracy:
    """CRLB standard deviations of range, speed and the two array NAFs.

    Args:
        cfg: System parameterization.
        gamma: Post-processing SNR γ (linear).
        subcarriers: Subcarrier count, defaults to N.
        symbols: Symbol count, defaults to the derived M.
        doppler_period_s: Symbol spacing of the Doppler samples, defaults to T_0.

    """
    if not gamma > 0.0:
        msg = f"SNR must be > 0, got {gamma!r}"
        raise FlextIsacSenseValidationError(msg, field_path="gamma")
    n = cfg.subcarrier_count if subcarriers is None else subcarriers
    m = symbols_per_frame(cfg) if symbols is None else symbols
    period = cfg.symbol_duration_s if doppler_period_s is None else doppler_period_s
    return CrlbAccuracy(
        range_m=_bound(C0 / (4.0 * math.pi * cfg.subcarrier_spacing_hz), n, gamma),
        speed_mps=_bound(
            C0 / (4.0 * math.pi * cfg.carrier_frequency_hz * period),
            m,
            gamma,
        ),
        vertical_naf=_bound(1.0 / (2.0 * math.pi), cfg.array.rows, gamma),
        horizontal_naf=_bound(1.0 / (2.0 * math.pi), cfg.array.cols, gamma),
    )


def clock_inflate(
    range_std_m: float,
    speed_std_mps: float,
    timing_std_s: float,
    frequency_std_hz: float,
    cfg: SystemConfig,
) -> tuple[float, float]:
    """Root-sum-square of the CRLB and independent clock errors."""
    if timing_std_s < 0.0 or frequency_std_hz < 0.0:
        msg = "clock error statistics must be >= 0"
        raise FlextIsacSenseValidationError(msg, field_path="clock")
    range_inflated = math.hypot(range_std_m, C0 * timing_std_s)
    speed_inflated = math.hypot(
        speed_std_mps,
        C0 / cfg.carrier_frequency_hz * frequency_std_hz,
    )
    return range_inflated, speed_inflated


def angles_to_naf(cfg: SystemConfig, azimuth_deg: float, elevation_deg: float) -> NafPair:
    """NAFs η = Δr·sin φ and ℓ = Δc·sin θ / cos φ (spacings in wavelengths)."""
    phi = math.radians(elevation_deg)
    cos_phi = math.cos(phi)
    if abs(elevation_deg) >= 90.0 or cos_phi <= 0.0:  # noqa: PLR2004
        msg = f"elevation must satisfy |φ| < 90°, got {elevation_deg}"
        raise FlextIsacSenseValidationError(msg, field_path="elevation_deg")
    theta = math.radians(azimuth_deg)
    return NafPair(
        vertical=cfg.array.row_spacing * math.sin(phi),
        horizontal=cfg.array.col_spacing * math.sin(theta) / cos_phi,
    )


def _worst_offset(center: float, delta: float, scale: float, angle: float) -> float | None:
    """Largest |asin(scale·(center ± delta)) − angle| over in-domain branches."""
    offsets = [
        abs(math.asin(arg) - angle)
        for arg in (scale * (center + delta), scale * (center - delta))
        if -1.0 <= arg <= 1.0
    ]
    return max(offsets) if offsets else None


def naf_accuracy_to_angles(
    cfg: SystemConfig,
    azimuth_deg: float,
    elevation_deg: float,
    vertical_naf_std: float,
    horizontal_naf_std: float,
) -> AngleAccuracy:
    """Map NAF deviations to worst-case angular deviations in degrees."""
    naf = angles_to_naf(cfg, azimuth_deg, elevation_deg)
    phi = math.radians(elevation_deg)
    theta = math.radians(azimuth_deg)
    sigma_phi = _worst_offset(
        naf.vertical,
        vertical_naf_std,
        1.0 / cfg.array.row_spacing,
        phi,
    )
    sigma_theta = _worst_offset(
        naf.horizontal,
        horizontal_naf_std,
        math.cos(phi) / cfg.array.col_spacing,
        theta,
    )
    if sigma_phi is None or sigma_theta is None:
        msg = (
            f"accuracy undefined at this steering (θ={azimuth_deg}°, φ={elevation_deg}°)"
        )
        raise FlextIsacSenseSteeringError(
            msg,
            module="kpi-accuracy",
            azimuth_deg=azimuth_deg,
            elevation_deg=elevation_deg,
        )
    return AngleAccuracy(
        elevation_deg=math.degrees(sigma_phi),
        azimuth_deg=math.degrees(sigma_theta),
    )


def accuracy_report(
    cfg: SystemConfig,
    gamma: float,
    azimuth_deg: float = 0.0,
    elevation_deg: float = 0.0,
    clock: ClockErrors | None = None,
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> AccuracyReport:
    """Full accuracy report, flagging SNRs below the detection threshold."""
    bounds = crlb_accuracy(cfg, gamma)
    warnings: list[str] = []
    below = gamma < gamma_star
    if below:
        warnings.append("SNR below detection threshold; bounds are not attainable")
        logger.warning("accuracy below detection SNR", snr=gamma, gamma_star=gamma_star)

    angles: AngleAccuracy | None = None
    if bounds.vertical_naf is not None and bounds.horizontal_naf is not None:
        try:
            angles = naf_accuracy_to_angles(
                cfg,
                azimuth_deg,
                elevation_deg,
                bounds.vertical_naf,
                bounds.horizontal_naf,
            )
        except FlextIsacSenseSteeringError as exc:
            warnings.append(exc.message)
            logger.warning("angular accuracy unavailable", reason=exc.message)

    range_clock: float | None = None
    speed_clock: float | None = None
    if clock is not None and bounds.range_m is not None and bounds.speed_mps is not None:
        range_clock, speed_clock = clock_inflate(
            bounds.range_m,
            bounds.speed_mps,
            clock.timing_std_s,
            clock.frequency_std_hz,
            cfg,
        )

    return AccuracyReport(
        snr=gamma,
        azimuth_deg=azimuth_deg,
        elevation_deg=elevation_deg,
        range_m=bounds.range_m,
        speed_mps=bounds.speed_mps,
        vertical_naf=bounds.vertical_naf,
        horizontal_naf=bounds.horizontal_naf,
        elevation_std_deg=angles.elevation_deg if angles else None,
        azimuth_std_deg=angles.azimuth_deg if angles else None,
        range_clock_m=range_clock,
        speed_clock_mps=speed_clock,
        below_detection_snr=below,
        warnings=tuple(warnings),
    )


__all__: list[str] = [
    "AccuracyReport",
    "AngleAccuracy",
    "CrlbAccuracy",
    "NafPair",
    "accuracy_report",
    "angles_to_naf",
    "clock_inflate",
    "crlb_accuracy",
    "naf_accuracy_to_angles",
]
