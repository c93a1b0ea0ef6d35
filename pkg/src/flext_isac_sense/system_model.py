"""Derived system parameters: array gain, symbol budget, EMF power limit.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.config import SystemConfig
from flext_isac_sense.exceptions import FlextIsacSenseConfigurationError
from flext_isac_sense.loggings import get_logger
from flext_isac_sense.quantities import C0, linear_to_db

logger = get_logger(__name__)

SUBFRAME_DURATION_S = 1e-3
SYMBOLS_PER_SLOT = 14
BASE_SUBCARRIER_SPACING_HZ = 15e3
SUPPORTED_NUMEROLOGIES = (0, 1, 2, 3, 4)
OVERRIDE_TOLERANCE_DB = 0.2


class IndoorPower(BaseModel):
    """EMF-limited indoor transmit power and the power actually used."""

    model_config = ConfigDict(frozen=True)

    limit_w: float = Field(gt=0.0, description="EMF limit P_T,I [W]")
    power_w: float = Field(gt=0.0, description="Override if configured, else limit")
    warnings: tuple[str, ...] = ()


class DerivedParams(BaseModel):
    """Quantities derived from a SystemConfig."""

    model_config = ConfigDict(frozen=True)

    array_gain: float = Field(gt=0.0, description="G_T (linear)")
    receive_gain: float = Field(gt=0.0, description="G_R (linear)")
    slot_duration_s: float = Field(gt=0.0)
    symbols_per_frame: int = Field(gt=0, description="M")
    doppler_sampling_period_s: float = Field(gt=0.0, description="T_D [s]")
    indoor_power_limit_w: float = Field(gt=0.0, description="P_T,I limit [W]")


def wavelength(cfg: SystemConfig) -> float:
    """Carrier wavelength in meters."""
    return C0 / cfg.carrier_frequency_hz


def array_gain(cfg: SystemConfig) -> float:
    """Transmit array gain G_T = R·C·G_E."""
    return cfg.array.element_count * cfg.element_gain


def receive_gain(cfg: SystemConfig) -> float:
    """Receive array gain G_R (equal to G_T for co-located identical arrays)."""
    return cfg.rx_array.element_count * cfg.element_gain


def numerology(cfg: SystemConfig) -> int:
    """Return numerology μ with Δf = 15 kHz · 2^μ."""
    ratio = cfg.subcarrier_spacing_hz / BASE_SUBCARRIER_SPACING_HZ
    mu = round(math.log2(ratio)) if ratio > 0 else -1
    if mu not in SUPPORTED_NUMEROLOGIES or not math.isclose(2.0**mu, ratio):
        msg = (
            f"unsupported numerology: subcarrier spacing {cfg.subcarrier_spacing_hz:g} Hz "
            "is not one of 15, 30, 60, 120 or 240 kHz"
        )
        raise FlextIsacSenseConfigurationError(
            msg,
            subcarrier_spacing_hz=cfg.subcarrier_spacing_hz,
        )
    return mu


def slot_duration(cfg: SystemConfig) -> float:
    """Slot duration 1 ms / 2^μ of the configured numerology."""
    return SUBFRAME_DURATION_S / 2 ** numerology(cfg)


def symbols_per_frame(cfg: SystemConfig) -> int:
    """OFDM symbols per frame M available for sensing.

    M = floor(slots per frame · L_PRS/K_comb · T*); a configured override wins.
    """
    if cfg.symbols_per_frame is not None:
        return cfg.symbols_per_frame
    slots = cfg.prs.frame_duration_s / slot_duration(cfg)
    exact = slots * cfg.prs.effective_symbols_per_slot * cfg.prs.tdd_duty_cycle
    # Tolerance absorbs floating error in products like 20 · 6 · 0.8.
    count = math.floor(exact + 1e-9)
    if count < 1:
        msg = f"PRS allocation yields no sensing symbols (M = {exact:.3f})"
        raise FlextIsacSenseConfigurationError(msg)
    return count


def indoor_power_limit(cfg: SystemConfig) -> IndoorPower:
    """EMF-constrained indoor power P_T,I = S0·4π·d'² / (G_T·T*·P*)."""
    limit = (
        cfg.emf_density_limit_w_m2
        * 4.0
        * math.pi
        * cfg.emf_reference_distance_m**2
        / (array_gain(cfg) * cfg.prs.tdd_duty_cycle * cfg.emf_power_reduction)
    )
    if cfg.indoor_power_w is None:
        return IndoorPower(limit_w=limit, power_w=limit)
    warnings: tuple[str, ...] = ()
    excess_db = linear_to_db(cfg.indoor_power_w / limit)
    if excess_db > OVERRIDE_TOLERANCE_DB:
        warning = (
            f"indoor power override exceeds the EMF limit by {excess_db:.2f} dB"
        )
        logger.warning(warning, band=cfg.band, limit_w=limit)
        warnings = (warning,)
    return IndoorPower(limit_w=limit, power_w=cfg.indoor_power_w, warnings=warnings)


def doppler_sampling_period(cfg: SystemConfig) -> float:
    """Effective Doppler sampling period T_D = K_comb·T_0."""
    return cfg.prs.comb_size * cfg.symbol_duration_s


def derive(cfg: SystemConfig) -> DerivedParams:
    """Bundle every derived parameter of a configuration."""
    return DerivedParams(
        array_gain=array_gain(cfg),
        receive_gain=receive_gain(cfg),
        slot_duration_s=slot_duration(cfg),
        symbols_per_frame=symbols_per_frame(cfg),
        doppler_sampling_period_s=doppler_sampling_period(cfg),
        indoor_power_limit_w=indoor_power_limit(cfg).limit_w,
    )


__all__: list[str] = [
    "DerivedParams",
    "IndoorPower",
    "array_gain",
    "derive",
    "doppler_sampling_period",
    "indoor_power_limit",
    "numerology",
    "receive_gain",
    "slot_duration",
    "symbols_per_frame",
    "wavelength",
]
