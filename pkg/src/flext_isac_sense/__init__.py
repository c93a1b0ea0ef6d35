"""FLEXT ISAC Sense - sensing KPIs and OFDM radar simulation for ISAC systems.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from flext_isac_sense.__version__ import __version__, __version_info__
from flext_isac_sense.accuracy import (
    AccuracyReport,
    AngleAccuracy,
    CrlbAccuracy,
    NafPair,
    accuracy_report,
    angles_to_naf,
    clock_inflate,
    crlb_accuracy,
    naf_accuracy_to_angles,
)
from flext_isac_sense.cli import cli, cli_main
from flext_isac_sense.config import (
    BUILTIN_BANDS,
    ArrayGeometry,
    PrsConfig,
    SystemConfig,
    SystemConfigDocument,
    builtin_config,
    load_system_config,
)
from flext_isac_sense.documents import JsonDocumentProcessor
from flext_isac_sense.exceptions import (
    FlextIsacSenseConfigurationError,
    FlextIsacSenseDetectionError,
    FlextIsacSenseError,
    FlextIsacSenseParseError,
    FlextIsacSenseProcessingError,
    FlextIsacSenseSteeringError,
    FlextIsacSenseValidationError,
)
from flext_isac_sense.exporters import ExportMetadata, PeriodogramExporter
from flext_isac_sense.link_budget import (
    DEFAULT_GAMMA_STAR,
    SnrBreakdown,
    estimate_rcs,
    max_range_noise,
    noise_power,
    received_power,
    snr,
    tx_power,
)
from flext_isac_sense.loggings import configure_logging, get_logger
from flext_isac_sense.models import (
    ClockErrors,
    ClutterObject,
    Requirements,
    SelfInterference,
    Target,
)
from flext_isac_sense.monte_carlo import (
    AxisStatistics,
    MonteCarloResult,
    monte_carlo_accuracy,
)
from flext_isac_sense.periodogram import (
    Detection,
    PeriodogramGrid,
    PeriodogramMetadata,
    SimScene,
    SymbolGrid,
    compute_periodogram,
    detect_targets,
    quantize,
    quantize_grid,
    run_trial,
    synthesize_grid,
)
from flext_isac_sense.quantities import (
    C0,
    CONSTANTS,
    N0,
    GainDb,
    GainLinear,
    PowerDbm,
    PowerWatts,
    db_to_linear,
    dbm_to_watts,
    linear_to_db,
    watts_to_dbm,
)
from flext_isac_sense.quantization import (
    ReceiverSqnr,
    max_range_quant,
    max_range_quant_relative,
    receiver_sqnr,
    sqnr,
    strongest_return,
)
from flext_isac_sense.reports import (
    KpiTable,
    RangeTable,
    build_kpi_table,
    build_range_table,
    kpi_table,
    range_table,
    render_report,
)
from flext_isac_sense.resolution import (
    AngleResolution,
    RangeLimits,
    ResolutionReport,
    UnambiguousLimits,
    achievable_range,
    angular_resolution,
    resolution_limited_range,
    resolution_report,
    resolutions,
    spatial_resolution,
    unambiguous_limits,
)
from flext_isac_sense.scenario import KpiReport, Scenario, Verdict, evaluate, load_scenario
from flext_isac_sense.system_model import (
    DerivedParams,
    array_gain,
    derive,
    doppler_sampling_period,
    indoor_power_limit,
    symbols_per_frame,
    wavelength,
)

__all__: list[str] = [
    "BUILTIN_BANDS",
    "C0",
    "CONSTANTS",
    "DEFAULT_GAMMA_STAR",
    "N0",
    "AccuracyReport",
    "AngleAccuracy",
    "AngleResolution",
    "ArrayGeometry",
    "AxisStatistics",
    "ClockErrors",
    "ClutterObject",
    "CrlbAccuracy",
    "DerivedParams",
    "Detection",
    "ExportMetadata",
    "FlextIsacSenseConfigurationError",
    "FlextIsacSenseDetectionError",
    "FlextIsacSenseError",
    "FlextIsacSenseParseError",
    "FlextIsacSenseProcessingError",
    "FlextIsacSenseSteeringError",
    "FlextIsacSenseValidationError",
    "GainDb",
    "GainLinear",
    "JsonDocumentProcessor",
    "KpiReport",
    "KpiTable",
    "MonteCarloResult",
    "NafPair",
    "PeriodogramExporter",
    "PeriodogramGrid",
    "PeriodogramMetadata",
    "PowerDbm",
    "PowerWatts",
    "PrsConfig",
    "RangeLimits",
    "RangeTable",
    "ReceiverSqnr",
    "Requirements",
    "ResolutionReport",
    "Scenario",
    "SelfInterference",
    "SimScene",
    "SnrBreakdown",
    "SymbolGrid",
    "SystemConfig",
    "SystemConfigDocument",
    "Target",
    "UnambiguousLimits",
    "Verdict",
    "__version__",
    "__version_info__",
    "accuracy_report",
    "achievable_range",
    "angles_to_naf",
    "angular_resolution",
    "array_gain",
    "build_kpi_table",
    "build_range_table",
    "builtin_config",
    "cli",
    "cli_main",
    "clock_inflate",
    "compute_periodogram",
    "configure_logging",
    "crlb_accuracy",
    "db_to_linear",
    "dbm_to_watts",
    "derive",
    "detect_targets",
    "doppler_sampling_period",
    "estimate_rcs",
    "evaluate",
    "get_logger",
    "indoor_power_limit",
    "kpi_table",
    "linear_to_db",
    "load_scenario",
    "load_system_config",
    "max_range_noise",
    "max_range_quant",
    "max_range_quant_relative",
    "monte_carlo_accuracy",
    "naf_accuracy_to_angles",
    "noise_power",
    "quantize",
    "quantize_grid",
    "range_table",
    "received_power",
    "receiver_sqnr",
    "render_report",
    "resolution_limited_range",
    "resolution_report",
    "resolutions",
    "run_trial",
    "snr",
    "spatial_resolution",
    "sqnr",
    "strongest_return",
    "symbols_per_frame",
    "synthesize_grid",
    "tx_power",
    "unambiguous_limits",
    "wavelength",
    "watts_to_dbm",
]
