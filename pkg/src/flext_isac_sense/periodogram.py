"""OFDM radar periodogram simulator.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

The symbol-domain grid is noise-normalized: thermal noise has unit variance
per resource element and each target amplitude carries its per-symbol SNR.
Grids are indexed (subcarrier n, symbol m, column c, row r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import ndimage
from scipy.signal import windows

from flext_isac_sense.accuracy import angles_to_naf
from flext_isac_sense.config import SystemConfig
from flext_isac_sense.exceptions import FlextIsacSenseValidationError
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR, snr
from flext_isac_sense.loggings import get_logger
from flext_isac_sense.models import Target
from flext_isac_sense.quantities import C0
from flext_isac_sense.resolution import unambiguous_limits
from flext_isac_sense.system_model import doppler_sampling_period, symbols_per_frame
from flext_isac_sense.typings import ComplexArray, FloatArray, PeriodogramAxes, WindowName

logger = get_logger(__name__)

DEFAULT_SIM_SUBCARRIERS = 256
DEFAULT_SIM_SYMBOLS = 64
# Floating-point dynamic range below the strongest bin treated as empty.
NUMERICAL_FLOOR = 1e-12
_LN2 = math.log(2.0)


class SimScene(BaseModel):
    """A desk-scale simulation scene."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    config: SystemConfig
    targets: tuple[Target, ...] = ()
    tx_power_w: float = Field(gt=0.0, description="Transmit power [W]")
    symbol_snr_override: tuple[float, ...] | None = Field(
        default=None,
        description="Per-target γ_S replacing the link budget",
    )
    seed: int = Field(default=0, ge=0, lt=2**64, description="RNG seed")
    subcarriers: int = Field(default=DEFAULT_SIM_SUBCARRIERS, ge=1, description="N_sim")
    symbols: int = Field(default=DEFAULT_SIM_SYMBOLS, ge=1, description="M_sim")
    columns: int = Field(default=1, ge=1, description="Array columns simulated")
    rows: int = Field(default=1, ge=1, description="Array rows simulated")
    noise: bool = Field(default=True, description="Add unit-variance thermal noise")
    look_elevation_deg: float = Field(
        default=0.0,
        gt=-90.0,
        lt=90.0,
        description="Elevation cut φ of azimuth estimates [deg]",
    )

    @model_validator(mode="after")
    def validate_scene(self) -> Self:
        """Run business rules after field validation."""
        error = self.validate_business_rules()
        if error is not None:
            raise ValueError(error)
        return self

    def validate_business_rules(self) -> str | None:
        """Validate scene dimensions and overrides."""
        for check in (self._validate_dimensions, self._validate_overrides):
            error = check()
            if error is not None:
                return error
        return None

    def _validate_dimensions(self) -> str | None:
        cfg = self.config
        if self.subcarriers > cfg.subcarrier_count:
            return f"N_sim={self.subcarriers} exceeds N={cfg.subcarrier_count}"
        frame_symbols = symbols_per_frame(cfg)
        if self.symbols > frame_symbols:
            return f"M_sim={self.symbols} exceeds M={frame_symbols}"
        if self.columns > cfg.array.cols or self.rows > cfg.array.rows:
            return "simulated array exceeds the configured array"
        return None

    def _validate_overrides(self) -> str | None:
        if self.symbol_snr_override is None:
            return None
        if len(self.symbol_snr_override) != len(self.targets):
            return "symbol_snr_override needs one value per target"
        if any(not value >= 0.0 for value in self.symbol_snr_override):
            return "symbol_snr_override values must be >= 0"
        return None

    def symbol_snrs(self) -> list[float]:
        """Per-target γ_S, from the override or the link budget."""
        if self.symbol_snr_override is not None:
            return list(self.symbol_snr_override)
        return [snr(self.config, t, self.tx_power_w).symbol_snr for t in self.targets]


@dataclass(frozen=True)
class SymbolGrid:
    """Complex symbol-domain grid and the configuration it was sampled with."""

    values: ComplexArray
    config: SystemConfig

    @property
    def shape(self) -> tuple[int, ...]:
        """Grid dimensions (n, m, c, r)."""
        return tuple(self.values.shape)


class PeriodogramMetadata(BaseModel):
    """Bin-to-physical mapping of a periodogram."""

    model_config = ConfigDict(frozen=True)

    axes: PeriodogramAxes
    window: WindowName
    pad: tuple[int, int]
    shape: tuple[int, int]
    range_bin_m: float = Field(gt=0.0, description="c0/(2·N_pad·Δf)")
    cross_axis: str = Field(description="speed_mps or horizontal_naf")
    cross_bin: float = Field(gt=0.0, description="Speed or NAF per bin")
    cross_center_index: int = Field(ge=0, description="Bin of zero speed / NAF")
    fft_bits: int | None = None
    column_spacing: float = Field(gt=0.0, description="Δc [wavelengths]")
    elevation_deg: float = Field(
        default=0.0,
        gt=-90.0,
        lt=90.0,
        description="Elevation cut φ of the azimuth read-out [deg]",
    )


@dataclass(frozen=True)
class PeriodogramGrid:
    """Normalized power over range × (Doppler | azimuth) bins."""

    power: FloatArray
    metadata: PeriodogramMetadata

    @property
    def range_axis(self) -> FloatArray:
        """Range of every row [m]."""
        return np.arange(self.power.shape[0], dtype=np.float64) * self.metadata.range_bin_m

    @property
    def cross_axis(self) -> FloatArray:
        """Speed [m/s] or NAF of every column."""
        count = self.power.shape[1]
        index = np.arange(count, dtype=np.float64) - self.metadata.cross_center_index
        return index * self.metadata.cross_bin


class Detection(BaseModel):
    """A resolved periodogram peak in physical units."""

    model_config = ConfigDict(frozen=True)

    range_m: float
    speed_mps: float | None = None
    horizontal_naf: float | None = None
    azimuth_deg: float | None = None
    elevation_deg: float | None = None
    range_bin: float
    cross_bin: float
    peak_power: float = Field(ge=0.0)
    peak_to_floor: float = Field(ge=0.0)


def synthesize_grid(scene: SimScene, trial: int = 0) -> SymbolGrid:
    """Synthesize the noise-normalized symbol grid of one trial."""
    cfg = scene.config
    rng = np.random.default_rng(np.random.SeedSequence([scene.seed, trial]))
    shape = (scene.subcarriers, scene.symbols, scene.columns, scene.rows)
    n = np.arange(scene.subcarriers, dtype=np.float64)[:, None, None, None]
    m = np.arange(scene.symbols, dtype=np.float64)[None, :, None, None]
    c = np.arange(scene.columns, dtype=np.float64)[None, None, :, None]
    r = np.arange(scene.rows, dtype=np.float64)[None, None, None, :]
    period = doppler_sampling_period(cfg)
    limits = unambiguous_limits(cfg)

    grid = np.zeros(shape, dtype=np.complex128)
    for target, symbol_snr in zip(scene.targets, scene.symbol_snrs(), strict=True):
        if target.range_m >= limits.range_m or abs(target.speed_mps) >= limits.speed_mps / 2:
            logger.warning(
                "target beyond unambiguous limits, it will alias",
                target=target.name,
                range_m=target.range_m,
                speed_mps=target.speed_mps,
            )
        naf = angles_to_naf(cfg, target.azimuth_deg, target.elevation_deg)
        chi = rng.uniform(0.0, 2.0 * math.pi)
        cycles = (
            -n * cfg.subcarrier_spacing_hz * 2.0 * target.range_m / C0
            + m * period * 2.0 * target.speed_mps * cfg.carrier_frequency_hz / C0
            + c * naf.horizontal
            + r * naf.vertical
        )
        grid += math.sqrt(symbol_snr) * np.exp(1j * (2.0 * math.pi * cycles + chi))

    if scene.noise:
        noise = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        grid += noise / math.sqrt(2.0)
    logger.debug("grid synthesized", trial=trial, shape=shape)
    return SymbolGrid(values=grid, config=cfg)


def quantize(values: ComplexArray, bits: int) -> ComplexArray:
    """Mid-rise quantization of real and imaginary parts at the grid's full scale."""
    if bits < 1:
        msg = f"bit width must be >= 1, got {bits}"
        raise FlextIsacSenseValidationError(msg, field_path="bits")
    full_scale = float(max(np.max(np.abs(values.real)), np.max(np.abs(values.imag))))
    if full_scale == 0.0:
        return values.copy()
    step = 2.0 * full_scale / 2**bits
    limit = full_scale - step / 2.0

    def _rail(part: FloatArray) -> FloatArray:
        levels = step * (np.floor(part / step) + 0.5)
        return np.clip(levels, -limit, limit)

    return _rail(values.real) + 1j * _rail(values.imag)


def quantize_grid(grid: SymbolGrid, bits: int) -> SymbolGrid:
    """ADC quantization with perfect AGC (full scale at the largest component)."""
    return SymbolGrid(values=quantize(grid.values, bits), config=grid.config)


def _window(name: WindowName, length: int) -> FloatArray:
    if name == "hann":
        return np.asarray(windows.hann(length, sym=False), dtype=np.float64)
    return np.ones(length, dtype=np.float64)


def _pads(pad: int | tuple[int, int]) -> tuple[int, int]:
    pads = (pad, pad) if isinstance(pad, int) else tuple(pad)
    if len(pads) != 2 or any(not isinstance(p, int) or p < 1 for p in pads):  # noqa: PLR2004
        msg = f"zero-pad factors must be integers >= 1, got {pad!r}"
        raise FlextIsacSenseValidationError(msg, field_path="pad")
    return pads[0], pads[1]


def compute_periodogram(
    grid: SymbolGrid,
    axes: PeriodogramAxes = "range-doppler",
    pad: int | tuple[int, int] = 1,
    window: WindowName = "rectangular",
    fft_bits: int | None = None,
    elevation_deg: float = 0.0,
) -> PeriodogramGrid:
    """Zero-padded periodogram over range and Doppler or azimuth.

    Range uses a scaled inverse transform so a target at +r lands on bin
    2·r·Δf·N_pad/c0; the cross axis is shifted so zero speed (or NAF) sits at
    the center. Power is normalized by Σw² so the noise floor is 1 and an
    unwindowed target of per-symbol SNR γ_S peaks at γ_S·N·M. Non-selected
    axes are averaged.
    Azimuth is read out in the elevation cut ``elevation_deg``.
    """
    values = grid.values
    if values.ndim != 4:  # noqa: PLR2004
        msg = f"grid must have 4 axes (n, m, c, r), got shape {values.shape}"
        raise FlextIsacSenseValidationError(msg, field_path="grid")
    cfg = grid.config
    range_pad, cross_pad = _pads(pad)
    cross = 1 if axes == "range-doppler" else 2
    averaged = tuple(a for a in (1, 2, 3) if a != cross)
    n_len, cross_len = values.shape[0], values.shape[cross]
    range_size, cross_size = n_len * range_pad, cross_len * cross_pad

    w_range = _window(window, n_len)
    w_cross = _window(window, cross_len)
    shape = [1, 1, 1, 1]
    shape[cross] = cross_len
    weighted = values * w_range[:, None, None, None] * w_cross.reshape(shape)
    if fft_bits is not None:
        weighted = quantize(weighted, fft_bits)

    spectrum = np.fft.ifft(weighted, n=range_size, axis=0) * range_size
    spectrum = np.fft.fftshift(np.fft.fft(spectrum, n=cross_size, axis=cross), axes=cross)
    if fft_bits is not None:
        spectrum = quantize(spectrum, fft_bits)

    norm = float(np.sum(w_range**2) * np.sum(w_cross**2))
    power = np.mean(np.abs(spectrum) ** 2, axis=averaged) / norm

    if axes == "range-doppler":
        cross_axis = "speed_mps"
        cross_bin = C0 / (
            2.0 * cfg.carrier_frequency_hz * cross_size * doppler_sampling_period(cfg)
        )
    else:
        cross_axis = "horizontal_naf"
        cross_bin = 1.0 / cross_size
    metadata = PeriodogramMetadata(
        axes=axes,
        window=window,
        pad=(range_pad, cross_pad),
        shape=(range_size, cross_size),
        range_bin_m=C0 / (2.0 * range_size * cfg.subcarrier_spacing_hz),
        cross_axis=cross_axis,
        cross_bin=cross_bin,
        cross_center_index=cross_size // 2,
        fft_bits=fft_bits,
        column_spacing=cfg.array.col_spacing,
        elevation_deg=elevation_deg,
    )
    return PeriodogramGrid(power=np.asarray(power, dtype=np.float64), metadata=metadata)


def estimate_noise_floor(power: FloatArray) -> float:
    """Mean noise power from the median of exponential-distributed bins."""
    return float(np.median(power)) / _LN2


def _vertex(minus: float, center: float, plus: float) -> float:
    """Offset of the parabola through three equally spaced samples, in bins."""
    curvature = minus - 2.0 * center + plus
    if curvature >= 0.0:
        return 0.0
    return float(np.clip(0.5 * (minus - plus) / curvature, -0.5, 0.5))


def detect_targets(
    pgm: PeriodogramGrid,
    threshold: float = DEFAULT_GAMMA_STAR,
) -> list[Detection]:
    """Local maxima above threshold × noise floor, refined per axis.

    Detections are sorted by decreasing peak power.
    """
    power = pgm.power
    peak = float(np.max(power)) if power.size else 0.0
    floor = max(estimate_noise_floor(power), peak * NUMERICAL_FLOOR)
    if floor <= 0.0:
        return []
    local_max = power == ndimage.maximum_filter(power, size=3, mode="wrap")
    candidates = np.argwhere(local_max & (power > threshold * floor))

    meta = pgm.metadata
    rows, cols = power.shape
    detections: list[Detection] = []
    for i, j in candidates:
        center = float(power[i, j])
        delta_i = _vertex(
            float(power[(i - 1) % rows, j]),
            center,
            float(power[(i + 1) % rows, j]),
        )
        delta_j = _vertex(
            float(power[i, (j - 1) % cols]),
            center,
            float(power[i, (j + 1) % cols]),
        )
        range_bin = (i + delta_i) % rows
        cross_bin = j + delta_j
        cross_value = (cross_bin - meta.cross_center_index) * meta.cross_bin
        speed = naf = azimuth = elevation = None
        if meta.cross_axis == "speed_mps":
            speed = cross_value
        else:
            naf = cross_value
            sine = naf * math.cos(math.radians(meta.elevation_deg)) / meta.column_spacing
            if abs(sine) <= 1.0:
                azimuth = math.degrees(math.asin(sine))
                elevation = meta.elevation_deg
        detections.append(
            Detection(
                range_m=range_bin * meta.range_bin_m,
                speed_mps=speed,
                horizontal_naf=naf,
                azimuth_deg=azimuth,
                elevation_deg=elevation,
                range_bin=range_bin,
                cross_bin=cross_bin,
                peak_power=center,
                peak_to_floor=center / floor,
            ),
        )
    detections.sort(key=lambda d: d.peak_power, reverse=True)
    return detections


def run_trial(
    scene: SimScene,
    axes: PeriodogramAxes = "range-doppler",
    pad: int | tuple[int, int] = 1,
    window: WindowName = "rectangular",
    *,
    trial: int = 0,
    adc: bool = True,
    threshold: float = DEFAULT_GAMMA_STAR,
) -> tuple[PeriodogramGrid, list[Detection]]:
    """Synthesize, quantize, transform and detect one trial of ``scene``."""
    grid = synthesize_grid(scene, trial)
    if adc:
        grid = quantize_grid(grid, scene.config.adc_bits)
    pgm = compute_periodogram(
        grid,
        axes,
        pad,
        window,
        scene.config.fft_bits,
        scene.look_elevation_deg,
    )
    return pgm, detect_targets(pgm, threshold)


__all__: list[str] = [
    "DEFAULT_SIM_SUBCARRIERS",
    "DEFAULT_SIM_SYMBOLS",
    "Detection",
    "PeriodogramGrid",
    "PeriodogramMetadata",
    "SimScene",
    "SymbolGrid",
    "compute_periodogram",
    "detect_targets",
    "estimate_noise_floor",
    "quantize",
    "quantize_grid",
    "run_trial",
    "synthesize_grid",
]
