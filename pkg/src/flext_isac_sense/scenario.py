"""Sensing scenarios, their JSON documents and KPI evaluation.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from pathlib import Path
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from flext_isac_sense.accuracy import AccuracyReport, accuracy_report
from flext_isac_sense.config import (
    SystemConfig,
    SystemConfigDocument,
    builtin_config,
    load_system_config,
)
from flext_isac_sense.documents import JsonDocumentProcessor
from flext_isac_sense.exceptions import FlextIsacSenseValidationError
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR_DB, SnrBreakdown, snr, tx_power
from flext_isac_sense.loggings import get_logger
from flext_isac_sense.models import (
    ClockErrors,
    ClutterObject,
    Requirements,
    SelfInterference,
    Target,
)
from flext_isac_sense.periodogram import (
    DEFAULT_SIM_SUBCARRIERS,
    DEFAULT_SIM_SYMBOLS,
    SimScene,
)
from flext_isac_sense.quantities import db_to_linear
from flext_isac_sense.resolution import (
    RangeLimits,
    ResolutionReport,
    achievable_range,
    resolution_report,
)
from flext_isac_sense.system_model import indoor_power_limit
from flext_isac_sense.typings import BindingConstraint, Placement

logger = get_logger(__name__)


class SelfInterferenceSpec(BaseModel):
    """Self-interference block; omitted values default to -80 dB at the array diagonal."""

    model_config = ConfigDict(extra="forbid")

    isolation_db: float | None = Field(default=None, le=0.0)
    separation_m: float | None = Field(default=None, gt=0.0)

    def resolve(self, cfg: SystemConfig) -> SelfInterference:
        """Fill defaults from the system array."""
        default = SelfInterference.default_for(cfg, self.isolation_db)
        if self.separation_m is None:
            return default
        return SelfInterference(isolation=default.isolation, separation_m=self.separation_m)


class SimulationSettings(BaseModel):
    """Desk-scale simulator settings of a scenario."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    subcarriers: int = Field(default=DEFAULT_SIM_SUBCARRIERS, ge=1)
    symbols: int = Field(default=DEFAULT_SIM_SYMBOLS, ge=1)
    columns: int = Field(default=1, ge=1)
    rows: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)
    extra_targets: tuple[Target, ...] = ()


class ScenarioDocument(BaseModel):
    """JSON scenario document."""

    model_config = ConfigDict(extra="forbid")

    name: str
    description: str = ""
    reference_note: str | None = None
    system: str | SystemConfigDocument | None = None
    system_file: str | None = None
    placement: Placement
    target: Target
    clutter: list[ClutterObject] = Field(default_factory=list)
    self_interference: SelfInterferenceSpec | None = None
    clock: ClockErrors | None = None
    requirements: Requirements | None = None
    gamma_star_db: float = DEFAULT_GAMMA_STAR_DB
    use_resolution: bool | None = None
    simulation: SimulationSettings = Field(default_factory=SimulationSettings)

    @model_validator(mode="after")
    def validate_document(self) -> Self:
        """Run business rules after field validation."""
        error = self.validate_business_rules()
        if error is not None:
            raise ValueError(error)
        return self

    def validate_business_rules(self) -> str | None:
        """Validate scenario business rules."""
        if (self.system is None) == (self.system_file is None):
            return "exactly one of 'system' and 'system_file' is required"
        return None

    def to_scenario(self, base_dir: Path | None = None) -> Scenario:
        """Resolve the system source and defaults into a Scenario."""
        if isinstance(self.system, SystemConfigDocument):
            cfg = self.system.to_config()
        elif self.system is not None:
            cfg = builtin_config(self.system)
        else:
            path = Path(str(self.system_file))
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            cfg = load_system_config(path)
        has_resolution = self.requirements is not None and self.requirements.has_resolution
        return Scenario(
            name=self.name,
            description=self.description,
            reference_note=self.reference_note,
            system=cfg,
            placement=self.placement,
            target=self.target,
            clutter=tuple(self.clutter),
            self_interference=(
                self.self_interference.resolve(cfg) if self.self_interference else None
            ),
            clock=self.clock,
            requirements=self.requirements,
            gamma_star=db_to_linear(self.gamma_star_db),
            use_resolution=(
                has_resolution if self.use_resolution is None else self.use_resolution
            ),
            simulation=self.simulation,
        )


class Scenario(BaseModel):
    """A fully resolved sensing scenario."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    description: str = ""
    reference_note: str | None = None
    system: SystemConfig
    placement: Placement
    target: Target
    clutter: tuple[ClutterObject, ...] = ()
    self_interference: SelfInterference | None = None
    clock: ClockErrors | None = None
    requirements: Requirements | None = None
    gamma_star: float = Field(gt=0.0, description="Detection threshold γ* (linear)")
    use_resolution: bool = True
    simulation: SimulationSettings = Field(default_factory=SimulationSettings)

    @property
    def tx_power_w(self) -> float:
        """Transmit power selected by the placement."""
        return tx_power(self.system, self.placement)

    def sim_scene(self, seed: int | None = None) -> SimScene:
        """Simulation scene: the target of interest plus any extra targets."""
        settings = self.simulation
        return SimScene(
            config=self.system,
            targets=(self.target, *settings.extra_targets),
            tx_power_w=self.tx_power_w,
            seed=settings.seed if seed is None else seed,
            subcarriers=settings.subcarriers,
            symbols=settings.symbols,
            columns=settings.columns,
            rows=settings.rows,
            look_elevation_deg=self.target.elevation_deg,
        )


class Verdict(BaseModel):
    """Feasibility of a scenario at its required range."""

    model_config = ConfigDict(frozen=True)

    feasible: bool
    required_range_m: float | None = None
    achievable_m: float
    binding: BindingConstraint
    reason: str | None = None


class KpiReport(BaseModel):
    """Every sensing KPI of a scenario evaluated at γ = γ*."""

    model_config = ConfigDict(frozen=True)

    scenario: str
    band: str
    placement: Placement
    tx_power_w: float
    gamma_star: float
    target: Target
    target_snr: SnrBreakdown
    accuracy: AccuracyReport
    resolution: ResolutionReport
    limits: RangeLimits
    binding: BindingConstraint
    verdict: Verdict
    reference_note: str | None = None
    warnings: tuple[str, ...] = ()


def load_scenario(reference: str | Path) -> Scenario:
    """Load a scenario from a JSON path or the name of a shipped sample."""
    processor = JsonDocumentProcessor()
    path = processor.resolve(reference)
    document = processor.load_model(path, ScenarioDocument)
    try:
        scenario = document.to_scenario(base_dir=path.parent)
    except ValidationError as exc:
        raise processor.validation_error(exc, source=str(path)) from exc
    logger.info("scenario loaded", scenario=scenario.name, band=scenario.system.band)
    return scenario


def _verdict(limits: RangeLimits, requirements: Requirements | None) -> Verdict:
    required = requirements.required_range_m if requirements else None
    achievable = limits.achievable_m
    if required is None or achievable >= required:
        return Verdict(
            feasible=True,
            required_range_m=required,
            achievable_m=achievable,
            binding=limits.binding,
        )
    return Verdict(
        feasible=False,
        required_range_m=required,
        achievable_m=achievable,
        binding=limits.binding,
        reason=(
            f"achievable range {achievable:.2f} m is below the required "
            f"{required:.2f} m ({limits.binding}-limited)"
        ),
    )


def evaluate(scenario: Scenario) -> KpiReport:
    """Evaluate all KPIs, the range limits and the feasibility verdict."""
    cfg = scenario.system
    target = scenario.target
    tx = scenario.tx_power_w
    warnings: list[str] = []
    if scenario.placement == "indoor":
        warnings.extend(indoor_power_limit(cfg).warnings)

    accuracy = accuracy_report(
        cfg,
        scenario.gamma_star,
        target.azimuth_deg,
        target.elevation_deg,
        scenario.clock,
        scenario.gamma_star,
    )
    resolution = resolution_report(
        cfg,
        target.azimuth_deg,
        target.elevation_deg,
        target.range_m,
    )
    limits = achievable_range(
        cfg,
        target,
        tx,
        clutter=scenario.clutter,
        self_interference=scenario.self_interference,
        requirements=scenario.requirements,
        gamma_star=scenario.gamma_star,
        use_resolution=scenario.use_resolution,
    )
    if (
        scenario.requirements is not None
        and scenario.requirements.has_resolution
        and not scenario.use_resolution
    ):
        warnings.append("resolution requirements ignored (use_resolution is off)")
    warnings.extend(accuracy.warnings)
    warnings.extend(resolution.warnings)
    verdict = _verdict(limits, scenario.requirements)
    logger.info(
        "scenario evaluated",
        scenario=scenario.name,
        achievable_m=limits.achievable_m,
        binding=limits.binding,
        feasible=verdict.feasible,
    )
    return KpiReport(
        scenario=scenario.name,
        band=cfg.band,
        placement=scenario.placement,
        tx_power_w=tx,
        gamma_star=scenario.gamma_star,
        target=target,
        target_snr=snr(cfg, target, tx),
        accuracy=accuracy,
        resolution=resolution,
        limits=limits,
        binding=limits.binding,
        verdict=verdict,
        reference_note=scenario.reference_note,
        warnings=tuple(warnings),
    )


def resolve_system(reference: str) -> SystemConfig:
    """Resolve a band name (FR1/FR2/FR3) or a SystemConfig JSON path."""
    if reference.upper() in {"FR1", "FR2", "FR3"}:
        return builtin_config(reference)
    path = Path(reference)
    if not path.is_file():
        msg = f"not a built-in band or an existing file: {reference!r}"
        raise FlextIsacSenseValidationError(msg, field_path="band")
    return load_system_config(path)


__all__: list[str] = [
    "KpiReport",
    "Scenario",
    "ScenarioDocument",
    "SelfInterferenceSpec",
    "SimulationSettings",
    "Verdict",
    "evaluate",
    "load_scenario",
    "resolve_system",
]
