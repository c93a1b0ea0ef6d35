"""Monte Carlo comparison of periodogram estimates with the CRLB.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import stats

from flext_isac_sense.accuracy import crlb_accuracy
from flext_isac_sense.exceptions import (
    FlextIsacSenseDetectionError,
    FlextIsacSenseValidationError,
)
from flext_isac_sense.link_budget import DEFAULT_GAMMA_STAR
from flext_isac_sense.loggings import get_logger
from flext_isac_sense.periodogram import (
    Detection,
    PeriodogramMetadata,
    SimScene,
    run_trial,
)
from flext_isac_sense.system_model import doppler_sampling_period
from flext_isac_sense.typings import WindowName

logger = get_logger(__name__)

MIN_TRIALS = 100
MAX_MISS_RATE = 0.10
CONFIDENCE = 0.95
DEFAULT_PAD = 4
MATCH_GATE_CELLS = 3.0


class AxisStatistics(BaseModel):
    """Empirical spread of one estimated quantity against its bound."""

    model_config = ConfigDict(frozen=True)

    mean: float
    bias: float
    std: float = Field(ge=0.0, description="Sample standard deviation (ddof=1)")
    ci_low: float = Field(ge=0.0)
    ci_high: float = Field(ge=0.0)
    crlb: float | None = None
    ratio: float | None = Field(default=None, description="std / crlb")


class MonteCarloResult(BaseModel):
    """Outcome of a Monte Carlo accuracy run."""

    model_config = ConfigDict(frozen=True)

    trials: int
    detected: int
    miss_rate: float
    snr: float = Field(gt=0.0, description="Post-processing SNR γ of the target")
    mean_peak_to_floor: float
    range_stats: AxisStatistics
    speed_stats: AxisStatistics


def _statistics(
    estimates: list[float],
    truth: float,
    crlb: float | None,
) -> AxisStatistics:
    values = np.asarray(estimates, dtype=np.float64)
    count = values.size
    std = float(np.std(values, ddof=1))
    dof = count - 1
    alpha = 1.0 - CONFIDENCE
    ci_low = std * math.sqrt(dof / stats.chi2.ppf(1.0 - alpha / 2.0, dof))
    ci_high = std * math.sqrt(dof / stats.chi2.ppf(alpha / 2.0, dof))
    mean = float(np.mean(values))
    return AxisStatistics(
        mean=mean,
        bias=mean - truth,
        std=std,
        ci_low=ci_low,
        ci_high=ci_high,
        crlb=crlb,
        ratio=std / crlb if crlb else None,
    )


def _nearest(
    detections: list[Detection],
    range_m: float,
    speed_mps: float,
    metadata: PeriodogramMetadata,
) -> Detection | None:
    """Closest detection within MATCH_GATE_CELLS resolution cells, else None."""
    range_cell = metadata.range_bin_m * metadata.pad[0]
    speed_cell = metadata.cross_bin * metadata.pad[1]

    def distance(d: Detection) -> float:
        speed = d.speed_mps if d.speed_mps is not None else 0.0
        return math.hypot((d.range_m - range_m) / range_cell, (speed - speed_mps) / speed_cell)

    best = min(detections, key=distance, default=None)
    if best is None or distance(best) > MATCH_GATE_CELLS:
        return None
    return best


def monte_carlo_accuracy(
    scene: SimScene,
    trials: int,
    gamma: float,
    *,
    pad: int = DEFAULT_PAD,
    window: WindowName = "rectangular",
    threshold: float = DEFAULT_GAMMA_STAR,
    adc: bool = False,
    workers: int = 1,
) -> MonteCarloResult:
    """Empirical range/speed spread of the first target at post-processing SNR γ.

    The first target's per-symbol SNR is set to γ/(N_sim·M_sim); other
    targets keep their link-budget or override values. A trial counts as a
    miss unless a detection lies within MATCH_GATE_CELLS resolution cells of
    the true range and speed. Trials are seeded from (seed, trial index) so
    results do not depend on ``workers``.
    """
    if trials < MIN_TRIALS:
        msg = f"at least {MIN_TRIALS} trials required, got {trials}"
        raise FlextIsacSenseValidationError(msg, field_path="trials")
    if not scene.targets:
        msg = "scene has no target to measure"
        raise FlextIsacSenseValidationError(msg, field_path="targets")
    if not gamma > 0.0:
        msg = f"SNR must be > 0, got {gamma!r}"
        raise FlextIsacSenseValidationError(msg, field_path="gamma")

    snrs = scene.symbol_snrs()
    snrs[0] = gamma / (scene.subcarriers * scene.symbols)
    scene = scene.model_copy(update={"symbol_snr_override": tuple(snrs)})
    truth = scene.targets[0]

    def one(trial: int) -> Detection | None:
        pgm, detections = run_trial(
            scene,
            "range-doppler",
            pad,
            window,
            trial=trial,
            adc=adc,
            threshold=threshold,
        )
        logger.debug("trial done", trial=trial, detections=len(detections))
        return _nearest(detections, truth.range_m, truth.speed_mps, pgm.metadata)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one, range(trials)))
    else:
        outcomes = [one(trial) for trial in range(trials)]

    hits = [d for d in outcomes if d is not None]
    miss_rate = 1.0 - len(hits) / trials
    logger.info("monte carlo finished", trials=trials, detected=len(hits))
    if miss_rate > MAX_MISS_RATE:
        msg = "insufficient detections of the reference target"
        raise FlextIsacSenseDetectionError(msg, miss_rate=miss_rate, trials=trials)

    bounds = crlb_accuracy(
        scene.config,
        gamma,
        subcarriers=scene.subcarriers,
        symbols=scene.symbols,
        doppler_period_s=doppler_sampling_period(scene.config),
    )
    return MonteCarloResult(
        trials=trials,
        detected=len(hits),
        miss_rate=miss_rate,
        snr=gamma,
        mean_peak_to_floor=float(np.mean([d.peak_to_floor for d in hits])),
        range_stats=_statistics([d.range_m for d in hits], truth.range_m, bounds.range_m),
        speed_stats=_statistics(
            [d.speed_mps if d.speed_mps is not None else 0.0 for d in hits],
            truth.speed_mps,
            bounds.speed_mps,
        ),
    )


__all__: list[str] = [
    "MATCH_GATE_CELLS",
    "AxisStatistics",
    "MonteCarloResult",
    "monte_carlo_accuracy",
]
