"""Unit-safe scalar quantities, dB conversions and physical constants.

All computation in the package happens in linear SI units; the value types
below exist for the JSON/CLI boundary where powers and gains are given in
dB, dBm or dBi.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from typing import Self

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.exceptions import FlextIsacSenseValidationError


def db_to_linear(x: float) -> float:
    """Convert decibels to a linear power ratio (10^(x/10))."""
    if not math.isfinite(x):
        msg = f"decibel value must be finite, got {x!r}"
        raise FlextIsacSenseValidationError(msg)
    return float(10.0 ** (x / 10.0))


def linear_to_db(x: float) -> float:
    """Convert a strictly positive linear power ratio to decibels."""
    if not x > 0.0 or not math.isfinite(x):
        msg = f"linear ratio must be finite and > 0, got {x!r}"
        raise FlextIsacSenseValidationError(msg)
    return 10.0 * math.log10(x)


def dbm_to_watts(x: float) -> float:
    """Convert dBm to watts."""
    return db_to_linear(x - 30.0)


def watts_to_dbm(x: float) -> float:
    """Convert watts to dBm."""
    return linear_to_db(x) + 30.0


class PowerWatts(BaseModel):
    """Strictly positive power in watts."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(gt=0.0, allow_inf_nan=False, description="Power [W]")

    @classmethod
    def from_dbm(cls, dbm: float) -> Self:
        """Build from a dBm value."""
        return cls(value=dbm_to_watts(dbm))

    def to_dbm(self) -> float:
        """Express the power in dBm."""
        return watts_to_dbm(self.value)


class PowerDbm(BaseModel):
    """Power expressed in dBm at the API boundary."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(allow_inf_nan=False, description="Power [dBm]")

    def to_watts(self) -> PowerWatts:
        """Convert to the linear watts form."""
        return PowerWatts.from_dbm(self.value)


class GainLinear(BaseModel):
    """Non-negative linear gain or loss ratio."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0.0, allow_inf_nan=False, description="Linear ratio")

    @classmethod
    def from_db(cls, db: float) -> Self:
        """Build from a dB value."""
        return cls(value=db_to_linear(db))

    def to_db(self) -> float:
        """Express the gain in dB."""
        return linear_to_db(self.value)


class GainDb(BaseModel):
    """Gain expressed in dB (or dBi) at the API boundary."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(allow_inf_nan=False, description="Gain [dB]")

    def to_linear(self) -> GainLinear:
        """Convert to the linear form."""
        return GainLinear.from_db(self.value)


class Constants(BaseModel):
    """Physical constants shared by every formula."""

    model_config = ConfigDict(frozen=True)

    speed_of_light: float = Field(
        default=299_792_458.0,
        description="Speed of light in vacuum c0 [m/s]",
    )
    thermal_noise_density_dbm_hz: float = Field(
        default=-174.0,
        description="Thermal noise spectral density N0 [dBm/Hz]",
    )

    @property
    def thermal_noise_density(self) -> float:
        """N0 in W/Hz."""
        return dbm_to_watts(self.thermal_noise_density_dbm_hz)


CONSTANTS = Constants()
C0: float = CONSTANTS.speed_of_light
N0: float = CONSTANTS.thermal_noise_density

__all__: list[str] = [
    "C0",
    "CONSTANTS",
    "N0",
    "Constants",
    "GainDb",
    "GainLinear",
    "PowerDbm",
    "PowerWatts",
    "db_to_linear",
    "dbm_to_watts",
    "linear_to_db",
    "watts_to_dbm",
]
