"""Radar objects shared by the analytics, the simulator and scenarios.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, Self

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.quantities import db_to_linear

if TYPE_CHECKING:
    from flext_isac_sense.config import SystemConfig

DEFAULT_ISOLATION_DB = -80.0


class Target(BaseModel):
    """A radar object of interest."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(default="target", description="Label used in reports")
    rcs_m2: float = Field(gt=0.0, allow_inf_nan=False, description="RCS Ψ [m²]")
    range_m: float = Field(gt=0.0, allow_inf_nan=False, description="Range r [m]")
    speed_mps: float = Field(
        default=0.0,
        allow_inf_nan=False,
        description="Radial speed v [m/s]",
    )
    azimuth_deg: float = Field(
        default=0.0,
        ge=-90.0,
        le=90.0,
        description="Azimuth θ [deg]",
    )
    elevation_deg: float = Field(
        default=0.0,
        gt=-90.0,
        lt=90.0,
        description="Elevation φ [deg]",
    )


class ClutterObject(BaseModel):
    """An environment object competing with the target for ADC dynamic range."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    rcs_m2: float = Field(gt=0.0, allow_inf_nan=False, description="RCS Ψ_t [m²]")
    range_m: float = Field(gt=0.0, allow_inf_nan=False, description="Range r_t [m]")

    @property
    def dominance(self) -> float:
        """Return strength Ψ_t / r_t⁴."""
        return self.rcs_m2 / self.range_m**4


class SelfInterference(BaseModel):
    """Direct coupling between transmit and receive antennas."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    isolation: float = Field(gt=0.0, le=1.0, description="Isolation α (linear)")
    separation_m: float = Field(gt=0.0, allow_inf_nan=False, description="r_t' [m]")

    @property
    def dominance(self) -> float:
        """Coupled strength α·4π / r_t'²."""
        return self.isolation * 4.0 * math.pi / self.separation_m**2

    @classmethod
    def default_for(cls, cfg: SystemConfig, isolation_db: float | None = None) -> Self:
        """Isolation of -80 dB (or the given value) at the array diagonal.

        A single-element array has no diagonal; one element spacing is used.
        """
        isolation = db_to_linear(
            DEFAULT_ISOLATION_DB if isolation_db is None else isolation_db,
        )
        array = cfg.array
        spacing = max(array.row_spacing, array.col_spacing) * cfg.wavelength_m
        separation = max(array.diagonal(cfg.wavelength_m), spacing)
        return cls(isolation=isolation, separation_m=separation)


class ClockErrors(BaseModel):
    """Timing and frequency offset statistics between transmitter and receiver."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    timing_std_s: float = Field(default=0.0, ge=0.0, description="σ_t [s]")
    frequency_std_hz: float = Field(default=0.0, ge=0.0, description="σ_f [Hz]")


class Requirements(BaseModel):
    """Use-case requirements on spatial separation and coverage."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    horizontal_resolution_m: float | None = Field(
        default=None,
        gt=0.0,
        description="Required horizontal separation ρ_h* [m]",
    )
    vertical_resolution_m: float | None = Field(
        default=None,
        gt=0.0,
        description="Required vertical separation ρ_v* [m]",
    )
    required_range_m: float | None = Field(
        default=None,
        gt=0.0,
        description="Range the use case must cover [m]",
    )

    @property
    def has_resolution(self) -> bool:
        """Whether any spatial resolution is required."""
        return (
            self.horizontal_resolution_m is not None
            or self.vertical_resolution_m is not None
        )


__all__: list[str] = [
    "DEFAULT_ISOLATION_DB",
    "ClockErrors",
    "ClutterObject",
    "Requirements",
    "SelfInterference",
    "Target",
]
