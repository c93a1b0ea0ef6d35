"""Quantization-noise limits of the sensing receiver.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

With perfect AGC the ADC full scale follows the strongest return, so a weak
target is buried once its echo falls below the quantization floor set by
the dominating clutter object or the self-interference.
"""

from __future__ import annotations

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, Field

from flext_isac_sense.config import SystemConfig
from flext_isac_sense.exceptions import FlextIsacSenseValidationError
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR
from flext_isac_sense.models import ClutterObject, SelfInterference
from flext_isac_sense.system_model import symbols_per_frame


class ReceiverSqnr(BaseModel):
    """SQNR budget of the ADC and the optional fixed-point transforms."""

    model_config = ConfigDict(frozen=True)

    adc_sqnr: float = Field(gt=0.0, description="SQNR_Q of the ADC")
    adc_snr: float = Field(gt=0.0, description="γ_Q incl. processing gain and PAPR")
    fft_sqnr: float | None = Field(default=None, description="SQNR_Q' of the FFT")
    effective: float = Field(gt=0.0, description="γ_q = min(γ_Q, SQNR_Q')")


def strongest_return(
    clutter: Sequence[ClutterObject],
    self_interference: SelfInterference | None = None,
) -> float:
    """Dominance factor max(max_t Ψ_t/r_t⁴, α·4π/r_t'²)."""
    branches = [obj.dominance for obj in clutter]
    if self_interference is not None:
        branches.append(self_interference.dominance)
    if not branches:
        msg = "environment has neither clutter nor self-interference"
        raise FlextIsacSenseValidationError(msg, field_path="clutter")
    return max(branches)


def sqnr(bits: int) -> float:
    """Uniform quantizer SQNR (2^Q)² = 4^Q."""
    if bits < 1:
        msg = f"bit width must be >= 1, got {bits}"
        raise FlextIsacSenseValidationError(msg, field_path="bits")
    return float(4**bits)


def receiver_sqnr(cfg: SystemConfig) -> ReceiverSqnr:
    """ADC SQNR with processing gain, capped by the FFT word length."""
    adc = sqnr(cfg.adc_bits)
    gain = cfg.subcarrier_count * symbols_per_frame(cfg)
    adc_snr = adc * gain / (cfg.papr_penalty * cfg.agc_loss)
    if cfg.fft_bits is None:
        return ReceiverSqnr(adc_sqnr=adc, adc_snr=adc_snr, effective=adc_snr)
    fft = sqnr(cfg.fft_bits)
    return ReceiverSqnr(
        adc_sqnr=adc,
        adc_snr=adc_snr,
        fft_sqnr=fft,
        effective=min(adc_snr, fft),
    )


def max_range_quant(
    cfg: SystemConfig,
    rcs: float,
    clutter: Sequence[ClutterObject],
    self_interference: SelfInterference | None = None,
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> float:
    """Quantization-limited range r_q* = (Ψ·γ_q / (t̄·γ*))^(1/4)."""
    if not rcs > 0.0 or not gamma_star > 0.0:
        msg = "rcs and gamma_star must be > 0"
        raise FlextIsacSenseValidationError(msg)
    dominance = strongest_return(clutter, self_interference)
    gamma_q = receiver_sqnr(cfg).effective
    return float((rcs * gamma_q / (dominance * gamma_star)) ** 0.25)


def max_range_quant_relative(
    rcs: float,
    dominator: ClutterObject,
    gamma_q: float,
    gamma_star: float = DEFAULT_GAMMA_STAR,
) -> float:
    """Same limit expressed relative to a dominating clutter object.

    r_q* = r_t·(Ψ·γ_q / (Ψ_t·γ*))^(1/4); agrees with :func:`max_range_quant`
    whenever ``dominator`` sets the strongest return.
    """
    return float(
        dominator.range_m * (rcs * gamma_q / (dominator.rcs_m2 * gamma_star)) ** 0.25,
    )


__all__: list[str] = [
    "ReceiverSqnr",
    "max_range_quant",
    "max_range_quant_relative",
    "sqnr",
    "strongest_return",
]
