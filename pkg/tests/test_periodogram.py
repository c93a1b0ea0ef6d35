"""Tests for the OFDM radar periodogram simulator.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError
from structlog.testing import capture_logs

from flext_isac_sense import (
    C0,
    FlextIsacSenseValidationError,
    SimScene,
    SymbolGrid,
    SystemConfig,
    Target,
    compute_periodogram,
    detect_targets,
    quantize,
    run_trial,
    synthesize_grid,
    unambiguous_limits,
)
from flext_isac_sense.periodogram import estimate_noise_floor

pytestmark = pytest.mark.simulation

N_SIM = 256
M_SIM = 64


def _range_bin(cfg: SystemConfig, pad: int = 1) -> float:
    return C0 / (2.0 * pad * N_SIM * cfg.subcarrier_spacing_hz)


def _scene(
    cfg: SystemConfig,
    targets: list[Target],
    snrs: list[float],
    *,
    noise: bool = True,
    seed: int = 0,
    columns: int = 1,
) -> SimScene:
    return SimScene(
        config=cfg,
        targets=tuple(targets),
        tx_power_w=1.0,
        symbol_snr_override=tuple(snrs),
        noise=noise,
        seed=seed,
        columns=columns,
    )


# Transform


def test_matches_brute_force_dft(fr2: SystemConfig) -> None:
    rng = np.random.default_rng(3)
    size = 32
    values = rng.standard_normal((size, size, 1, 1)) + 1j * rng.standard_normal(
        (size, size, 1, 1),
    )
    pgm = compute_periodogram(SymbolGrid(values=values, config=fr2), "range-doppler", 1)

    index = np.arange(size)
    f_range = np.exp(2j * np.pi * np.outer(index, index) / size)
    f_doppler = np.exp(-2j * np.pi * np.outer(index, index) / size)
    spectrum = f_range.T @ values[:, :, 0, 0] @ f_doppler
    expected = np.abs(np.fft.fftshift(spectrum, axes=1)) ** 2 / (size * size)

    np.testing.assert_allclose(pgm.power, expected, rtol=0, atol=1e-9 * expected.max())


def test_parseval_without_padding(fr2: SystemConfig) -> None:
    rng = np.random.default_rng(11)
    values = rng.standard_normal((64, 16, 1, 1)) + 1j * rng.standard_normal((64, 16, 1, 1))
    pgm = compute_periodogram(SymbolGrid(values=values, config=fr2))
    assert math.isclose(
        float(pgm.power.sum()),
        float(np.sum(np.abs(values) ** 2)),
        rel_tol=1e-9,
    )


def test_constant_grid_lands_on_zero_bins(fr2: SystemConfig) -> None:
    values = np.ones((32, 16, 1, 1), dtype=np.complex128)
    pgm = compute_periodogram(SymbolGrid(values=values, config=fr2))
    center = pgm.metadata.cross_center_index
    assert center == 8
    assert math.isclose(float(pgm.power[0, center]), 32 * 16)
    assert float(pgm.power.sum() - pgm.power[0, center]) < 1e-9


def test_metadata_bin_mapping(fr2: SystemConfig) -> None:
    values = np.zeros((N_SIM, M_SIM, 1, 1), dtype=np.complex128)
    pgm = compute_periodogram(SymbolGrid(values=values, config=fr2), pad=(4, 2))
    meta = pgm.metadata
    assert meta.shape == (4 * N_SIM, 2 * M_SIM)
    assert pgm.power.shape == meta.shape
    assert math.isclose(meta.range_bin_m, _range_bin(fr2, 4))
    limits = unambiguous_limits(fr2)
    assert math.isclose(meta.cross_bin, limits.speed_mps / (2 * M_SIM))
    assert math.isclose(float(pgm.cross_axis[meta.cross_center_index]), 0.0)
    assert math.isclose(float(pgm.range_axis[-1]), (4 * N_SIM - 1) * meta.range_bin_m)


@pytest.mark.parametrize("pad", [0, -2, (1, 0), (2, 2, 2)])
def test_rejects_invalid_pad(fr2: SystemConfig, pad: object) -> None:
    values = np.zeros((8, 8, 1, 1), dtype=np.complex128)
    with pytest.raises(FlextIsacSenseValidationError, match="pad"):
        compute_periodogram(SymbolGrid(values=values, config=fr2), pad=pad)  # type: ignore[arg-type]


def test_rejects_grid_without_four_axes(fr2: SystemConfig) -> None:
    values = np.zeros((8, 8), dtype=np.complex128)
    with pytest.raises(FlextIsacSenseValidationError, match="4 axes"):
        compute_periodogram(SymbolGrid(values=values, config=fr2))


@pytest.mark.parametrize("window", ["rectangular", "hann"])
def test_noise_floor_is_unity(fr2: SystemConfig, window: str) -> None:
    scene = _scene(fr2, [], [], seed=5)
    pgm = compute_periodogram(synthesize_grid(scene), pad=4, window=window)  # type: ignore[arg-type]
    assert math.isclose(float(pgm.power.mean()), 1.0, rel_tol=0.03)


def test_noise_floor_estimate_from_median() -> None:
    rng = np.random.default_rng(2)
    power = rng.exponential(1.0, size=100_000)
    assert math.isclose(estimate_noise_floor(power), 1.0, rel_tol=0.02)


# Synthesis


def test_synthesis_is_reproducible(fr2: SystemConfig, human: Target) -> None:
    scene = _scene(fr2, [human], [0.1], seed=42)
    first = synthesize_grid(scene, trial=3)
    again = synthesize_grid(scene, trial=3)
    other = synthesize_grid(scene, trial=4)
    np.testing.assert_array_equal(first.values, again.values)
    assert not np.array_equal(first.values, other.values)
    assert first.shape == (N_SIM, M_SIM, 1, 1)


def test_link_budget_sets_symbol_snr(fr2: SystemConfig, human: Target) -> None:
    scene = SimScene(config=fr2, targets=(human,), tx_power_w=1.0)
    (gamma_s,) = scene.symbol_snrs()
    assert gamma_s > 0.0


def test_aliasing_target_is_logged(fr2: SystemConfig) -> None:
    far = Target(name="far", rcs_m2=1.0, range_m=2_000.0)
    with capture_logs() as logs:
        synthesize_grid(_scene(fr2, [far], [1.0], noise=False))
    assert any(entry["log_level"] == "warning" for entry in logs)
    assert any("alias" in str(entry["event"]) for entry in logs)


@pytest.mark.parametrize(
    ("update", "message"),
    [
        ({"subcarriers": 10**6}, "N_sim=1000000 exceeds"),
        ({"symbols": 385}, "M_sim=385 exceeds M=384"),
        ({"columns": 33}, "exceeds the configured array"),
        ({"symbol_snr_override": (1.0, 2.0)}, "one value per target"),
        ({"symbol_snr_override": (-1.0,)}, ">= 0"),
    ],
)
def test_scene_rules(
    fr2: SystemConfig,
    human: Target,
    update: dict[str, object],
    message: str,
) -> None:
    document: dict[str, object] = {
        "config": fr2,
        "targets": (human,),
        "tx_power_w": 1.0,
        **update,
    }
    with pytest.raises(ValidationError, match=message):
        SimScene.model_validate(document)


# Quantization


def test_quantization_error_bounded_by_half_step() -> None:
    rng = np.random.default_rng(8)
    values = rng.standard_normal(4096) + 1j * rng.standard_normal(4096)
    full_scale = max(np.abs(values.real).max(), np.abs(values.imag).max())
    quantized = quantize(values, 24)
    bound = full_scale * 2.0**-24 * (1 + 1e-9)
    assert np.abs(quantized.real - values.real).max() <= bound
    assert np.abs(quantized.imag - values.imag).max() <= bound


def test_quantized_sinusoid_sqnr() -> None:
    samples = np.arange(4096)
    tone = np.exp(2j * np.pi * 0.1234 * samples)
    error = quantize(tone, 8) - tone
    sqnr_db = 10 * math.log10(float(np.mean(np.abs(tone) ** 2) / np.mean(np.abs(error) ** 2)))
    assert abs(sqnr_db - 49.9) <= 3.0


def test_quantize_zero_grid_and_bit_width() -> None:
    zeros = np.zeros(16, dtype=np.complex128)
    np.testing.assert_array_equal(quantize(zeros, 4), zeros)
    with pytest.raises(FlextIsacSenseValidationError, match="bit width"):
        quantize(zeros, 0)


# Detection


def test_noiseless_target_detected_exactly(fr2: SystemConfig) -> None:
    speed_bin = unambiguous_limits(fr2).speed_mps / M_SIM
    target = Target(rcs_m2=1.0, range_m=20 * _range_bin(fr2), speed_mps=3 * speed_bin)
    scene = _scene(fr2, [target], [1.0], noise=False)
    _, detections = run_trial(scene, adc=False)
    assert len(detections) == 1
    (detection,) = detections
    assert abs(detection.range_m - target.range_m) < _range_bin(fr2) / 10
    assert detection.speed_mps is not None
    assert abs(detection.speed_mps - target.speed_mps) < speed_bin / 10
    assert math.isclose(detection.peak_power, N_SIM * M_SIM, rel_tol=1e-9)


def test_range_azimuth_detection(fr2: SystemConfig) -> None:
    target = Target(rcs_m2=1.0, range_m=12 * _range_bin(fr2), azimuth_deg=30.0)
    scene = _scene(fr2, [target], [1.0], noise=False, columns=8)
    pgm, detections = run_trial(scene, "range-azimuth", adc=False)
    assert pgm.metadata.cross_axis == "horizontal_naf"
    assert len(detections) == 1
    (detection,) = detections
    assert detection.speed_mps is None
    assert detection.horizontal_naf is not None
    assert math.isclose(detection.horizontal_naf, 0.25, abs_tol=1e-9)
    assert detection.azimuth_deg is not None
    assert math.isclose(detection.azimuth_deg, 30.0, abs_tol=1e-6)
    assert math.isclose(detection.peak_power, N_SIM * 8, rel_tol=1e-9)
    assert detection.elevation_deg == 0.0


def test_range_azimuth_detection_in_elevation_cut(fr2: SystemConfig) -> None:
    azimuth = math.degrees(math.asin(0.5 * math.cos(math.radians(30.0))))
    target = Target(
        rcs_m2=1.0,
        range_m=12 * _range_bin(fr2),
        azimuth_deg=azimuth,
        elevation_deg=30.0,
    )
    scene = _scene(fr2, [target], [1.0], noise=False, columns=8)
    scene = scene.model_copy(update={"look_elevation_deg": 30.0})
    pgm, detections = run_trial(scene, "range-azimuth", adc=False)
    assert pgm.metadata.elevation_deg == 30.0
    (detection,) = detections
    assert detection.horizontal_naf is not None
    assert math.isclose(detection.horizontal_naf, 0.25, abs_tol=1e-9)
    assert detection.azimuth_deg is not None
    assert math.isclose(detection.azimuth_deg, azimuth, abs_tol=1e-6)
    assert detection.elevation_deg == 30.0


def test_range_doppler_detection_has_no_direction(fr2: SystemConfig) -> None:
    target = Target(rcs_m2=1.0, range_m=12 * _range_bin(fr2), elevation_deg=10.0)
    (detection,) = run_trial(_scene(fr2, [target], [1.0], noise=False), adc=False)[1]
    assert detection.azimuth_deg is None
    assert detection.elevation_deg is None


def test_empty_periodogram_has_no_detections(fr2: SystemConfig) -> None:
    values = np.zeros((16, 16, 1, 1), dtype=np.complex128)
    assert detect_targets(compute_periodogram(SymbolGrid(values=values, config=fr2))) == []


@pytest.mark.slow
def test_peak_to_floor_matches_processing_gain(fr2: SystemConfig) -> None:
    gain = 1000.0
    target = Target(rcs_m2=1.0, range_m=20 * _range_bin(fr2))
    scene = _scene(fr2, [target], [gain / (N_SIM * M_SIM)], seed=1)
    ratios = []
    for trial in range(500):
        _, detections = run_trial(scene, trial=trial, adc=False)
        nearest = min(detections, key=lambda d: abs(d.range_bin - 20))
        ratios.append(nearest.peak_to_floor)
    assert abs(10 * math.log10(float(np.mean(ratios)) / gain)) <= 1.0


@pytest.mark.slow
@pytest.mark.parametrize(
    ("bins", "expected"),
    [((10.25, 11.75), 2), ((10.0, 10.4), 1)],
)
def test_two_target_separation(
    fr2: SystemConfig,
    bins: tuple[float, float],
    expected: int,
) -> None:
    gamma_s = 10 ** 2.5 / (N_SIM * M_SIM)
    targets = [Target(rcs_m2=1.0, range_m=b * _range_bin(fr2)) for b in bins]
    scene = _scene(fr2, targets, [gamma_s, gamma_s], seed=9)
    trials = 200
    matches = sum(
        len(run_trial(scene, trial=trial, adc=False)[1]) == expected
        for trial in range(trials)
    )
    assert matches >= 0.95 * trials


@pytest.mark.slow
@pytest.mark.parametrize(("fft_bits", "detected"), [(8, False), (None, True)])
def test_fft_word_length_masks_weak_target(
    fr2: SystemConfig,
    fft_bits: int | None,
    detected: bool,  # noqa: FBT001
) -> None:
    cfg = fr2.model_copy(update={"fft_bits": fft_bits})
    strong = Target(name="strong", rcs_m2=100.0, range_m=20 * _range_bin(cfg))
    weak = Target(name="weak", rcs_m2=0.01, range_m=60 * _range_bin(cfg))
    snrs = [1e9 / (N_SIM * M_SIM), 10**3.5 / (N_SIM * M_SIM)]
    scene = _scene(cfg, [strong, weak], snrs, seed=4)
    trials = 100
    hits = 0
    for trial in range(trials):
        _, detections = run_trial(scene, trial=trial, adc=False)
        assert detections
        assert abs(detections[0].range_bin - 20) < 1
        hits += any(abs(d.range_bin - 60) <= 1 for d in detections)
    if detected:
        assert hits >= 0.95 * trials
    else:
        assert hits <= 0.05 * trials


def test_fft_word_length_floor(fr2: SystemConfig) -> None:
    cfg = fr2.model_copy(update={"fft_bits": 8})
    target = Target(rcs_m2=1.0, range_m=20 * _range_bin(cfg))
    scene = _scene(cfg, [target], [1e9 / (N_SIM * M_SIM)], noise=False)
    pgm, _ = run_trial(scene, adc=False)
    floor_db = 10 * math.log10(float(np.median(pgm.power) / pgm.power.max()))
    assert -49.0 <= floor_db <= -44.0
    assert pgm.metadata.fft_bits == 8
