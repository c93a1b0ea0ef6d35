"""System parameterizations for ISAC sensing using pydantic models.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from flext_isac_sense.exceptions import FlextIsacSenseValidationError
from flext_isac_sense.quantities import (
    C0,
    db_to_linear,
    dbm_to_watts,
    linear_to_db,
    watts_to_dbm,
)
from flext_isac_sense.typings import BandName

# Constants for validation limits
PRS_SYMBOL_OPTIONS = frozenset({2, 4, 6, 12})
PRS_COMB_OPTIONS = frozenset({1, 2, 4, 6, 12})
MAX_GUARD_FRACTION = 0.06
DEFAULT_FRAME_DURATION_S = 10e-3
DEFAULT_PAPR_PENALTY_DB = 8.0


class ArrayGeometry(BaseModel):
    """Uniform rectangular array: R rows by C columns, spacings in wavelengths."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    rows: int = Field(ge=1, description="Number of antenna rows R")
    cols: int = Field(ge=1, description="Number of antenna columns C")
    row_spacing: float = Field(gt=0.0, description="Row spacing Δr [wavelengths]")
    col_spacing: float = Field(gt=0.0, description="Column spacing Δc [wavelengths]")

    @property
    def element_count(self) -> int:
        """Total number of radiating elements."""
        return self.rows * self.cols

    def diagonal(self, wavelength: float) -> float:
        """Aperture diagonal in meters."""
        height = (self.rows - 1) * self.row_spacing * wavelength
        width = (self.cols - 1) * self.col_spacing * wavelength
        return math.hypot(height, width)


class PrsConfig(BaseModel):
    """Positioning reference signal allocation used as the sensing waveform."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    symbols_per_slot: int = Field(
        default=12,
        description="OFDM symbols allocated for PRS per slot L_PRS",
    )
    comb_size: int = Field(
        default=2,
        description="PRS comb size K_comb (1 means every subcarrier)",
    )
    frame_duration_s: float = Field(
        default=DEFAULT_FRAME_DURATION_S,
        gt=0.0,
        description="Radio frame duration T_f [s]",
    )
    tdd_duty_cycle: float = Field(
        default=0.8,
        gt=0.0,
        le=1.0,
        description="Downlink TDD duty cycle T*",
    )

    @field_validator("symbols_per_slot")
    @classmethod
    def validate_symbols_per_slot(cls, v: int) -> int:
        """Restrict L_PRS to the standard options."""
        if v not in PRS_SYMBOL_OPTIONS:
            msg = f"L_PRS must be one of {sorted(PRS_SYMBOL_OPTIONS)}, got {v}"
            raise ValueError(msg)
        return v

    @field_validator("comb_size")
    @classmethod
    def validate_comb_size(cls, v: int) -> int:
        """Restrict K_comb to the standard options."""
        if v not in PRS_COMB_OPTIONS:
            msg = f"K_comb must be one of {sorted(PRS_COMB_OPTIONS)}, got {v}"
            raise ValueError(msg)
        return v

    @model_validator(mode="after")
    def validate_effective_symbols(self) -> Self:
        """L_PRS / K_comb must give an integer count of effective symbols."""
        if self.symbols_per_slot % self.comb_size:
            msg = (
                f"L_PRS={self.symbols_per_slot} is not a multiple of "
                f"K_comb={self.comb_size}"
            )
            raise ValueError(msg)
        return self

    @property
    def effective_symbols_per_slot(self) -> int:
        """Effective PRS symbols per slot M_slot_PRS."""
        return self.symbols_per_slot // self.comb_size


class SystemConfig(BaseModel):
    """One frequency-range system parameterization, linear SI units throughout."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    band: BandName = Field(default="custom", description="Band label")
    carrier_frequency_hz: float = Field(gt=0.0, description="Carrier frequency f_c")
    subcarrier_spacing_hz: float = Field(gt=0.0, description="Subcarrier spacing Δf")
    subcarrier_count: int = Field(ge=2, description="Number of subcarriers N")
    symbol_duration_s: float = Field(
        gt=0.0,
        description="OFDM symbol duration incl. cyclic prefix T_0",
    )
    noise_figure: float = Field(ge=1.0, description="Noise figure F (linear)")
    element_gain: float = Field(gt=0.0, description="Element gain G_E (linear)")
    array: ArrayGeometry
    receive_array: ArrayGeometry | None = Field(
        default=None,
        description="Receive array when it differs from the transmit array",
    )
    outdoor_power_w: float = Field(gt=0.0, description="Outdoor power P_T,O [W]")
    indoor_power_w: float | None = Field(
        default=None,
        gt=0.0,
        description="Indoor power override P_T,I [W]; derived from EMF when absent",
    )
    adc_bits: int = Field(default=12, ge=1, description="ADC resolution Q")
    fft_bits: int | None = Field(default=None, ge=1, description="FFT bits Q'")
    prs: PrsConfig = Field(default_factory=PrsConfig)
    papr_penalty: float = Field(
        default_factory=lambda: db_to_linear(DEFAULT_PAPR_PENALTY_DB),
        ge=1.0,
        description="PAPR penalty γ_PAPR (linear)",
    )
    agc_loss: float = Field(default=1.0, ge=1.0, description="AGC loss (linear)")
    emf_power_reduction: float = Field(
        default=0.25,
        gt=0.0,
        le=1.0,
        description="EMF power reduction factor P*",
    )
    emf_density_limit_w_m2: float = Field(
        default=10.0,
        gt=0.0,
        description="EMF power density limit S0 [W/m²]",
    )
    emf_reference_distance_m: float = Field(
        default=1.0,
        gt=0.0,
        description="Minimum distance d' between transmitter and humans [m]",
    )
    symbols_per_frame: int | None = Field(
        default=None,
        ge=1,
        description="Override for the derived OFDM symbol count M",
    )
    nominal_bandwidth_hz: float | None = Field(
        default=None,
        gt=0.0,
        description="Carrier-aggregation bandwidth B",
    )

    @model_validator(mode="after")
    def validate_system(self) -> Self:
        """Run business rules after field validation."""
        error = self.validate_business_rules()
        if error is not None:
            raise ValueError(error)
        return self

    def validate_business_rules(self) -> str | None:
        """Validate system business rules, returning the first violation."""
        for check in (self._validate_symbol_duration, self._validate_bandwidth):
            error = check()
            if error is not None:
                return error
        return None

    def _validate_symbol_duration(self) -> str | None:
        """T_0 must cover at least the useful symbol 1/Δf."""
        useful = 1.0 / self.subcarrier_spacing_hz
        if self.symbol_duration_s < useful * (1.0 - 1e-9):
            return (
                f"symbol duration {self.symbol_duration_s:.3e} s is shorter than "
                f"1/Δf = {useful:.3e} s"
            )
        return None

    def _validate_bandwidth(self) -> str | None:
        """N·Δf must fit inside B with at most the guard-band gap."""
        if self.nominal_bandwidth_hz is None:
            return None
        occupied = self.occupied_bandwidth_hz
        nominal = self.nominal_bandwidth_hz
        if occupied > nominal + self.subcarrier_spacing_hz:
            return f"N·Δf = {occupied:.6g} Hz exceeds nominal bandwidth {nominal:.6g} Hz"
        if (nominal - occupied) / nominal > MAX_GUARD_FRACTION:
            return (
                f"N·Δf = {occupied:.6g} Hz leaves more than "
                f"{MAX_GUARD_FRACTION:.0%} of {nominal:.6g} Hz unused"
            )
        return None

    @property
    def wavelength_m(self) -> float:
        """Carrier wavelength λ = c0 / f_c."""
        return C0 / self.carrier_frequency_hz

    @property
    def occupied_bandwidth_hz(self) -> float:
        """Occupied bandwidth N·Δf."""
        return self.subcarrier_count * self.subcarrier_spacing_hz

    @property
    def rx_array(self) -> ArrayGeometry:
        """Receive array (the transmit array unless overridden)."""
        return self.receive_array or self.array


class ArrayDocument(BaseModel):
    """JSON form of an array geometry."""

    model_config = ConfigDict(extra="forbid")

    rows: int
    cols: int
    row_spacing_wavelengths: float
    col_spacing_wavelengths: float

    def to_geometry(self) -> ArrayGeometry:
        """Convert to the domain model."""
        return ArrayGeometry(
            rows=self.rows,
            cols=self.cols,
            row_spacing=self.row_spacing_wavelengths,
            col_spacing=self.col_spacing_wavelengths,
        )

    @classmethod
    def from_geometry(cls, geometry: ArrayGeometry) -> Self:
        """Build from the domain model."""
        return cls(
            rows=geometry.rows,
            cols=geometry.cols,
            row_spacing_wavelengths=geometry.row_spacing,
            col_spacing_wavelengths=geometry.col_spacing,
        )


class SystemConfigDocument(BaseModel):
    """JSON document for a SystemConfig: SI units, dB values under ``*_db`` keys."""

    model_config = ConfigDict(extra="forbid")

    band: BandName = "custom"
    carrier_frequency_hz: float
    subcarrier_spacing_hz: float
    subcarrier_count: int
    symbol_duration_s: float
    noise_figure_db: float
    element_gain_db: float
    array: ArrayDocument
    receive_array: ArrayDocument | None = None
    outdoor_power_dbm: float
    indoor_power_dbm: float | None = None
    adc_bits: int = 12
    fft_bits: int | None = None
    prs: PrsConfig = Field(default_factory=PrsConfig)
    papr_penalty_db: float = DEFAULT_PAPR_PENALTY_DB
    agc_loss_db: float = 0.0
    emf_power_reduction: float = 0.25
    emf_density_limit_w_m2: float = 10.0
    emf_reference_distance_m: float = 1.0
    symbols_per_frame: int | None = None
    nominal_bandwidth_hz: float | None = None

    def to_config(self) -> SystemConfig:
        """Convert dB boundary values into the linear SystemConfig."""
        return SystemConfig(
            band=self.band,
            carrier_frequency_hz=self.carrier_frequency_hz,
            subcarrier_spacing_hz=self.subcarrier_spacing_hz,
            subcarrier_count=self.subcarrier_count,
            symbol_duration_s=self.symbol_duration_s,
            noise_figure=db_to_linear(self.noise_figure_db),
            element_gain=db_to_linear(self.element_gain_db),
            array=self.array.to_geometry(),
            receive_array=(
                self.receive_array.to_geometry() if self.receive_array else None
            ),
            outdoor_power_w=dbm_to_watts(self.outdoor_power_dbm),
            indoor_power_w=(
                dbm_to_watts(self.indoor_power_dbm)
                if self.indoor_power_dbm is not None
                else None
            ),
            adc_bits=self.adc_bits,
            fft_bits=self.fft_bits,
            prs=self.prs,
            papr_penalty=db_to_linear(self.papr_penalty_db),
            agc_loss=db_to_linear(self.agc_loss_db),
            emf_power_reduction=self.emf_power_reduction,
            emf_density_limit_w_m2=self.emf_density_limit_w_m2,
            emf_reference_distance_m=self.emf_reference_distance_m,
            symbols_per_frame=self.symbols_per_frame,
            nominal_bandwidth_hz=self.nominal_bandwidth_hz,
        )

    @classmethod
    def from_config(cls, cfg: SystemConfig) -> Self:
        """Express a SystemConfig with dB boundary values."""
        return cls(
            band=cfg.band,
            carrier_frequency_hz=cfg.carrier_frequency_hz,
            subcarrier_spacing_hz=cfg.subcarrier_spacing_hz,
            subcarrier_count=cfg.subcarrier_count,
            symbol_duration_s=cfg.symbol_duration_s,
            noise_figure_db=linear_to_db(cfg.noise_figure),
            element_gain_db=linear_to_db(cfg.element_gain),
            array=ArrayDocument.from_geometry(cfg.array),
            receive_array=(
                ArrayDocument.from_geometry(cfg.receive_array)
                if cfg.receive_array
                else None
            ),
            outdoor_power_dbm=watts_to_dbm(cfg.outdoor_power_w),
            indoor_power_dbm=(
                watts_to_dbm(cfg.indoor_power_w)
                if cfg.indoor_power_w is not None
                else None
            ),
            adc_bits=cfg.adc_bits,
            fft_bits=cfg.fft_bits,
            prs=cfg.prs,
            papr_penalty_db=linear_to_db(cfg.papr_penalty),
            agc_loss_db=linear_to_db(cfg.agc_loss),
            emf_power_reduction=cfg.emf_power_reduction,
            emf_density_limit_w_m2=cfg.emf_density_limit_w_m2,
            emf_reference_distance_m=cfg.emf_reference_distance_m,
            symbols_per_frame=cfg.symbols_per_frame,
            nominal_bandwidth_hz=cfg.nominal_bandwidth_hz,
        )


def _builtin_fr1() -> SystemConfig:
    return SystemConfig(
        band="FR1",
        carrier_frequency_hz=3.5e9,
        subcarrier_spacing_hz=30e3,
        subcarrier_count=6552,
        symbol_duration_s=35.67e-6,
        noise_figure=db_to_linear(8.0),
        element_gain=2.0,
        array=ArrayGeometry(rows=24, cols=8, row_spacing=0.7, col_spacing=0.5),
        outdoor_power_w=dbm_to_watts(49.0),
        indoor_power_w=dbm_to_watts(32.2),
        adc_bits=12,
        nominal_bandwidth_hz=200e6,
    )


def _builtin_fr2() -> SystemConfig:
    return SystemConfig(
        band="FR2",
        carrier_frequency_hz=28e9,
        subcarrier_spacing_hz=120e3,
        subcarrier_count=12672,
        symbol_duration_s=8.92e-6,
        noise_figure=db_to_linear(8.0),
        element_gain=2.0,
        array=ArrayGeometry(rows=32, cols=32, row_spacing=0.5, col_spacing=0.5),
        outdoor_power_w=dbm_to_watts(36.0),
        indoor_power_w=dbm_to_watts(25.0),
        adc_bits=12,
        nominal_bandwidth_hz=1600e6,
    )


def _builtin_fr3() -> SystemConfig:
    return SystemConfig(
        band="FR3",
        carrier_frequency_hz=7e9,
        subcarrier_spacing_hz=60e3,
        subcarrier_count=6480,
        symbol_duration_s=17.84e-6,
        noise_figure=db_to_linear(8.0),
        element_gain=2.0,
        array=ArrayGeometry(rows=32, cols=32, row_spacing=0.5, col_spacing=0.5),
        outdoor_power_w=dbm_to_watts(49.0),
        indoor_power_w=dbm_to_watts(25.0),
        adc_bits=12,
        nominal_bandwidth_hz=400e6,
    )


_BUILTINS = {"FR1": _builtin_fr1, "FR2": _builtin_fr2, "FR3": _builtin_fr3}
BUILTIN_BANDS: tuple[str, ...] = tuple(_BUILTINS)


def builtin_config(band: str) -> SystemConfig:
    """Return the frozen built-in parameterization for FR1, FR2 or FR3."""
    factory = _BUILTINS.get(band.upper())
    if factory is None:
        msg = f"unknown band {band!r}; expected one of {', '.join(BUILTIN_BANDS)}"
        raise FlextIsacSenseValidationError(msg, field_path="band")
    return factory()


def load_system_config(path: str | Path) -> SystemConfig:
    """Load a SystemConfig JSON document."""
    # Local import: documents depends on this module's models.
    from flext_isac_sense.documents import JsonDocumentProcessor  # noqa: PLC0415

    processor = JsonDocumentProcessor()
    document = processor.load_model(Path(path), SystemConfigDocument)
    try:
        return document.to_config()
    except ValueError as exc:
        raise processor.validation_error(exc, source=str(path)) from exc


__all__: list[str] = [
    "BUILTIN_BANDS",
    "MAX_GUARD_FRACTION",
    "ArrayDocument",
    "ArrayGeometry",
    "PrsConfig",
    "SystemConfig",
    "SystemConfigDocument",
    "builtin_config",
    "load_system_config",
]
