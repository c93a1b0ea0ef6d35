"""Resolution, ambiguity and achievable sensing range.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.accuracy import angles_to_naf
from flext_isac_sense.config import SystemConfig
from flext_isac_sense.exceptions import (
    FlextIsacSenseProcessingError,
    FlextIsacSenseSteeringError,
    FlextIsacSenseValidationError,
)
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR, max_range_noise
from flext_isac_sense.loggings import get_logger
from flext_isac_sense.models import ClutterObject, Requirements, SelfInterference, Target
from flext_isac_sense.quantities import C0
from flext_isac_sense.quantization import max_range_quant
from flext_isac_sense.system_model import doppler_sampling_period
from flext_isac_sense.typings import BindingConstraint

logger = get_logger(__name__)


class ResolutionCells(BaseModel):
    """Resolution in range, speed and the two NAF domains."""

    model_config = ConfigDict(frozen=True)

    range_m: float = Field(gt=0.0, description="ρ_r [m]")
    speed_mps: float = Field(gt=0.0, description="ρ_s [m/s]")
    vertical_naf: float = Field(gt=0.0, description="ρ_z")
    horizontal_naf: float = Field(gt=0.0, description="ρ_x")


class AngleResolution(BaseModel):
    """Angular resolution in degrees at a steering direction.

    An axis is ``None`` when it is unresolvable at that steering.
    """

    model_config = ConfigDict(frozen=True)

    elevation_deg: float | None = Field(default=None, gt=0.0, description="ρ_φ [deg]")
    azimuth_deg: float | None = Field(default=None, gt=0.0, description="ρ_θ [deg]")


class UnambiguousLimits(BaseModel):
    """Largest range and speed without aliasing."""

    model_config = ConfigDict(frozen=True)

    range_m: float = Field(gt=0.0, description="r_u* [m]")
    speed_mps: float = Field(gt=0.0, description="s_u [m/s]")


class ResolutionReport(BaseModel):
    """Every resolution KPI at one incidence direction.

    ``vertical_slope``/``horizontal_slope`` are sin ρ_φ and sin ρ_θ, the
    metric resolution per meter of range; the metric values are filled when a
    range is given.
    """

    model_config = ConfigDict(frozen=True)

    azimuth_deg: float = 0.0
    elevation_deg: float = 0.0
    range_m: float
    speed_mps: float
    vertical_naf: float
    horizontal_naf: float
    elevation_res_deg: float | None = None
    azimuth_res_deg: float | None = None
    vertical_slope: float | None = None
    horizontal_slope: float | None = None
    at_range_m: float | None = None
    vertical_m: float | None = None
    horizontal_m: float | None = None
    unambiguous_range_m: float
    unambiguous_speed_mps: float
    warnings: tuple[str, ...] = ()


class RangeLimits(BaseModel):
    """Individual range limits and the achievable range r*."""

    model_config = ConfigDict(frozen=True)

    noise_m: float = Field(gt=0.0, description="r_n*")
    quantization_m: float | None = Field(default=None, description="r_q*")
    vertical_m: float | None = Field(default=None, description="r_v*")
    horizontal_m: float | None = Field(default=None, description="r_h*")
    resolution_m: float | None = Field(default=None, description="max(r_v*, r_h*)")
    ambiguity_m: float = Field(gt=0.0, description="r_u*")
    achievable_m: float = Field(gt=0.0, description="r*")
    binding: BindingConstraint
    use_resolution: bool = True


def resolutions(cfg: SystemConfig) -> ResolutionCells:
    """Range, speed and sum co-array NAF resolutions."""
    return ResolutionCells(
        range_m=C0 / (2.0 * cfg.occupied_bandwidth_hz),
        speed_mps=C0 / (2.0 * cfg.prs.frame_duration_s * cfg.carrier_frequency_hz),
        vertical_naf=1.0 / (2 * cfg.array.rows - 1),
        horizontal_naf=1.0 / (2 * cfg.array.cols - 1),
    )


def _offset(argument: float, angle: float) -> float | None:
    if not -1.0 <= argument <= 1.0:
        return None
    offset = math.asin(argument) - angle
    return offset if offset > 0.0 else None


def angular_resolution(
    cfg: SystemConfig,
    azimuth_deg: float = 0.0,
    elevation_deg: float = 0.0,
) -> AngleResolution:
    """Angular resolution as the angle offset of one NAF resolution cell."""
    cells = resolutions(cfg)
    naf = angles_to_naf(cfg, azimuth_deg, elevation_deg)
    phi = math.radians(elevation_deg)
    rho_phi = _offset((naf.vertical + cells.vertical_naf) / cfg.array.row_spacing, phi)
    rho_theta = _offset(
        math.cos(phi) * (naf.horizontal + cells.horizontal_naf) / cfg.array.col_spacing,
        math.radians(azimuth_deg),
    )
    if rho_phi is None and rho_theta is None:
        msg = f"unresolvable at this steering (θ={azimuth_deg}°, φ={elevation_deg}°)"
        raise FlextIsacSenseSteeringError(
            msg,
            module="kpi-resolution",
            azimuth_deg=azimuth_deg,
            elevation_deg=elevation_deg,
        )
    if rho_phi is None or rho_theta is None:
        logger.warning(
            "one axis unresolvable at this steering",
            axis="elevation" if rho_phi is None else "azimuth",
            azimuth_deg=azimuth_deg,
            elevation_deg=elevation_deg,
        )
    return AngleResolution(
        elevation_deg=None if rho_phi is None else math.degrees(rho_phi),
        azimuth_deg=None if rho_theta is None else math.degrees(rho_theta),
    )


def _slope(resolution_deg: float | None) -> float | None:
    return None if resolution_deg is None else math.sin(math.radians(resolution_deg))


def spatial_resolution(
    cfg: SystemConfig,
    azimuth_deg: float,
    elevation_deg: float,
    range_m: float,
) -> tuple[float | None, float | None]:
    """Metric resolution (ρ_v, ρ_h) = (r·sin ρ_φ, r·sin ρ_θ); None if unresolvable."""
    if range_m < 0.0:
        msg = f"range must be >= 0, got {range_m}"
        raise FlextIsacSenseValidationError(msg, field_path="range_m")
    angles = angular_resolution(cfg, azimuth_deg, elevation_deg)
    vertical = _slope(angles.elevation_deg)
    horizontal = _slope(angles.azimuth_deg)
    return (
        None if vertical is None else range_m * vertical,
        None if horizontal is None else range_m * horizontal,
    )


def _limit(
    required: float | None,
    resolution_deg: float | None,
    axis: str,
) -> float | None:
    if required is None:
        return None
    if not required > 0.0:
        msg = f"required resolution must be > 0, got {required}"
        raise FlextIsacSenseValidationError(msg, field_path=axis)
    if resolution_deg is None:
        logger.warning("resolution requirement unattainable at this steering", axis=axis)
        return None
    slope = math.sin(math.radians(resolution_deg))
    if slope == 0.0:
        logger.warning("degenerate angular resolution", axis=axis)
        return math.inf
    return required / slope


def resolution_limited_range(
    cfg: SystemConfig,
    azimuth_deg: float,
    elevation_deg: float,
    vertical_m: float | None = None,
    horizontal_m: float | None = None,
) -> tuple[float | None, float | None]:
    """Ranges (r_v*, r_h*) at which the required separations are still met.

    A limit is None when its requirement is absent or its axis is
    unresolvable at the steering.
    """
    if vertical_m is None and horizontal_m is None:
        return None, None
    try:
        angles = angular_resolution(cfg, azimuth_deg, elevation_deg)
    except FlextIsacSenseSteeringError as exc:
        logger.warning("resolution-limited range unavailable", reason=exc.message)
        angles = AngleResolution()
    return (
        _limit(vertical_m, angles.elevation_deg, "vertical_resolution_m"),
        _limit(horizontal_m, angles.azimuth_deg, "horizontal_resolution_m"),
    )


def unambiguous_limits(cfg: SystemConfig) -> UnambiguousLimits:
    """Unambiguous range c0/(2Δf) and speed c0/(2·f_c·T_D)."""
    return UnambiguousLimits(
        range_m=C0 / (2.0 * cfg.subcarrier_spacing_hz),
        speed_mps=C0 / (2.0 * cfg.carrier_frequency_hz * doppler_sampling_period(cfg)),
    )


def achievable_range(
    cfg: SystemConfig,
    target: Target,
    tx_power_w: float,
    *,
    clutter: Sequence[ClutterObject] = (),
    self_interference: SelfInterference | None = None,
    requirements: Requirements | None = None,
    gamma_star: float = DEFAULT_GAMMA_STAR,
    use_resolution: bool = True,
) -> RangeLimits:
    """Most stringent of the noise, quantization, resolution and ambiguity limits.

    The resolution term is max(r_v*, r_h*) since targets need to be separated
    in one domain only; it is not even computed when ``use_resolution`` is
    false. Ties go to the earlier constraint in that order.
    """
    noise = max_range_noise(cfg, target.rcs_m2, tx_power_w, gamma_star)
    quant = None
    if clutter or self_interference is not None:
        quant = max_range_quant(cfg, target.rcs_m2, clutter, self_interference, gamma_star)

    vertical = horizontal = resolution = None
    if use_resolution and requirements is not None and requirements.has_resolution:
        vertical, horizontal = resolution_limited_range(
            cfg,
            target.azimuth_deg,
            target.elevation_deg,
            requirements.vertical_resolution_m,
            requirements.horizontal_resolution_m,
        )
        available = [r for r in (vertical, horizontal) if r is not None]
        resolution = max(available) if available else None

    ambiguity = unambiguous_limits(cfg).range_m
    candidates: list[tuple[BindingConstraint, float | None]] = [
        ("noise", noise),
        ("quantization", quant),
        ("resolution", resolution),
        ("ambiguity", ambiguity),
    ]
    present: list[tuple[BindingConstraint, float]] = []
    for name, value in candidates:
        if value is not None:
            present.append((name, value))
    if not present:
        msg = "no range limit computable"
        raise FlextIsacSenseProcessingError(msg, module="kpi-resolution")
    binding, achievable = min(present, key=lambda item: item[1])
    return RangeLimits(
        noise_m=noise,
        quantization_m=quant,
        vertical_m=vertical,
        horizontal_m=horizontal,
        resolution_m=resolution,
        ambiguity_m=ambiguity,
        achievable_m=achievable,
        binding=binding,
        use_resolution=use_resolution,
    )


def resolution_report(
    cfg: SystemConfig,
    azimuth_deg: float = 0.0,
    elevation_deg: float = 0.0,
    range_m: float | None = None,
) -> ResolutionReport:
    """Full resolution report; metric values at ``range_m`` when given."""
    cells = resolutions(cfg)
    limits = unambiguous_limits(cfg)
    warnings: list[str] = []
    elevation_res = azimuth_res = None
    vertical_slope = horizontal_slope = None
    try:
        angles = angular_resolution(cfg, azimuth_deg, elevation_deg)
    except FlextIsacSenseSteeringError as exc:
        warnings.append(exc.message)
        logger.warning("angular resolution unavailable", reason=exc.message)
    else:
        elevation_res = angles.elevation_deg
        azimuth_res = angles.azimuth_deg
        vertical_slope = _slope(elevation_res)
        horizontal_slope = _slope(azimuth_res)
        for axis, value in (("elevation", elevation_res), ("azimuth", azimuth_res)):
            if value is None:
                warnings.append(f"{axis} unresolvable at this steering")

    vertical_m = horizontal_m = None
    if range_m is not None:
        vertical_m = None if vertical_slope is None else range_m * vertical_slope
        horizontal_m = None if horizontal_slope is None else range_m * horizontal_slope

    return ResolutionReport(
        azimuth_deg=azimuth_deg,
        elevation_deg=elevation_deg,
        range_m=cells.range_m,
        speed_mps=cells.speed_mps,
        vertical_naf=cells.vertical_naf,
        horizontal_naf=cells.horizontal_naf,
        elevation_res_deg=elevation_res,
        azimuth_res_deg=azimuth_res,
        vertical_slope=vertical_slope,
        horizontal_slope=horizontal_slope,
        at_range_m=range_m,
        vertical_m=vertical_m,
        horizontal_m=horizontal_m,
        unambiguous_range_m=limits.range_m,
        unambiguous_speed_mps=limits.speed_mps,
        warnings=tuple(warnings),
    )


__all__: list[str] = [
    "AngleResolution",
    "RangeLimits",
    "ResolutionCells",
    "ResolutionReport",
    "UnambiguousLimits",
    "achievable_range",
    "angular_resolution",
    "resolution_limited_range",
    "resolutions",
    "spatial_resolution",
    "unambiguous_limits",
]
