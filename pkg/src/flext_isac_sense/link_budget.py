"""Thermal-noise link budget of the mono-static radar channel.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

All powers are linear watts, gains linear ratios, distances meters.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.config import SystemConfig
from flext_isac_sense.exceptions import FlextIsacSenseValidationError
from flext_isac_sense.models import Target
from flext_isac_sense.quantities import C0, N0, db_to_linear
from flext_isac_sense.system_model import (
    array_gain,
    indoor_power_limit,
    receive_gain,
    symbols_per_frame,
)
from flext_isac_sense.typings import Placement

DEFAULT_GAMMA_STAR_DB = 17.0
DEFAULT_GAMMA_STAR = db_to_linear(DEFAULT_GAMMA_STAR_DB)

_FOUR_PI_CUBED = (4.0 * math.pi) ** 3


class SnrBreakdown(BaseModel):
    """Link budget terms at one target range."""

    model_config = ConfigDict(frozen=True)

    received_power_w: float = Field(gt=0.0, description="P_R [W]")
    noise_power_w: float = Field(gt=0.0, description="P_N [W]")
    symbol_snr: float = Field(gt=0.0, description="γ_S per resource element")
    processing_gain: float = Field(gt=0.0, description="N·M")
    snr: float = Field(gt=0.0, description="γ = γ_S·N·M after the transforms")


def _require_positive(name: str, value: float) -> None:
    if not value > 0.0 or not math.isfinite(value):
        msg = f"must be finite and > 0, got {value!r}"
        raise FlextIsacSenseValidationError(msg, field_path=name)


def tx_power(cfg: SystemConfig, placement: Placement) -> float:
    """Transmit power for the placement: P_T,O outdoors, P_T,I indoors."""
    if placement == "outdoor":
        return cfg.outdoor_power_w
    return indoor_power_limit(cfg).power_w


def received_power(
    cfg: SystemConfig,
    rcs: float,
    range_m: float,
    tx_power_w: float,
) -> float:
    """Radar-equation echo power P_T·G_T·G_R·Ψ·c0² / ((4π)³·r⁴·f_c²)."""
    _require_positive("rcs", rcs)
    _require_positive("range", range_m)
    _require_positive("tx_power", tx_power_w)
    return (
        tx_power_w
        * array_gain(cfg)
        * receive_gain(cfg)
        * rcs
        * C0**2
        / (_FOUR_PI_CUBED * range_m**4 * cfg.carrier_frequency_hz**2)
    )


def noise_power(cfg: SystemConfig) -> float:
    """Thermal noise power N0·F·N·Δf."""
    return N0 * cfg.noise_figure * cfg.occupied_bandwidth_hz


def snr(cfg: SystemConfig, target: Target, tx_power_w: float) -> SnrBreakdown:
    """Per-symbol and post-processing SNR for ``target``."""
    p_r = received_power(cfg, target.rcs_m2, target.range_m, tx_power_w)
    p_n = noise_power(cfg)
    symbol_snr = p_r / p_n
    gain = float(cfg.subcarrier_count * symbols_per_frame(cfg))
    return SnrBreakdown(
        received_power_w=p_r,
        noise_power_w=p_n,
        symbol_snr=symbol_snr,
        processing_gain=gain,
        snr=symbol_snr * gain,
    )


def max_range_noise(
    cfg: SystemConfig,
    rcs: float,
    tx_power_w: float,
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> float:
    """Largest range at which γ reaches γ*.

    N cancels between the processing gain and the noise bandwidth, so only
    the symbol count M and Δf enter.
    """
    _require_positive("rcs", rcs)
    _require_positive("tx_power", tx_power_w)
    _require_positive("gamma_star", gamma_star)
    numerator = (
        tx_power_w
        * array_gain(cfg)
        * receive_gain(cfg)
        * rcs
        * C0**2
        * symbols_per_frame(cfg)
    )
    denominator = (
        gamma_star
        * _FOUR_PI_CUBED
        * cfg.carrier_frequency_hz**2
        * N0
        * cfg.noise_figure
        * cfg.subcarrier_spacing_hz
    )
    return float((numerator / denominator) ** 0.25)


def estimate_rcs(
    cfg: SystemConfig,
    peak_power_w: float,
    range_m: float,
    tx_power_w: float,
) -> float:
    """Invert the radar equation for Ψ from a periodogram peak and its range."""
    _require_positive("peak_power", peak_power_w)
    _require_positive("range", range_m)
    _require_positive("tx_power", tx_power_w)
    gain = cfg.subcarrier_count * symbols_per_frame(cfg)
    return (
        peak_power_w
        * _FOUR_PI_CUBED
        * range_m**4
        * cfg.carrier_frequency_hz**2
        / (tx_power_w * gain * array_gain(cfg) * receive_gain(cfg) * C0**2)
    )


__all__: list[str] = [
    "DEFAULT_GAMMA_STAR",
    "DEFAULT_GAMMA_STAR_DB",
    "SnrBreakdown",
    "estimate_rcs",
    "max_range_noise",
    "noise_power",
    "received_power",
    "snr",
    "tx_power",
]
