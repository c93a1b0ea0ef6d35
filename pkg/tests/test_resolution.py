"""Tests for resolution, ambiguity and the achievable range.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st
from structlog.testing import capture_logs

from flext_isac_sense import (
    ClutterObject,
    FlextIsacSenseSteeringError,
    FlextIsacSenseValidationError,
    Requirements,
    SystemConfig,
    Target,
    UnambiguousLimits,
    achievable_range,
    angular_resolution,
    builtin_config,
    resolution_limited_range,
    resolution_report,
    resolutions,
    spatial_resolution,
    unambiguous_limits,
)
from flext_isac_sense import resolution as resolution_module

pytestmark = pytest.mark.unit

BANDS = ("FR1", "FR2", "FR3")


@pytest.mark.parametrize(
    ("band", "range_res", "speed_res"),
    [("FR1", 0.76, 4.29), ("FR2", 0.1, 0.54), ("FR3", 0.39, 2.14)],
)
def test_range_and_speed_resolution(band: str, range_res: float, speed_res: float) -> None:
    cells = resolutions(builtin_config(band))
    assert math.isclose(cells.range_m, range_res, rel_tol=0.10)
    assert math.isclose(cells.speed_mps, speed_res, rel_tol=0.10)


def test_naf_resolution_uses_sum_coarray(fr1: SystemConfig) -> None:
    cells = resolutions(fr1)
    assert math.isclose(cells.vertical_naf, 1 / 47)
    assert math.isclose(cells.horizontal_naf, 1 / 15)


@pytest.mark.parametrize(
    ("band", "elevation", "azimuth"),
    [("FR1", 1.74, 7.66), ("FR2", 1.82, 1.82), ("FR3", 1.82, 1.82)],
)
def test_boresight_angular_resolution(band: str, elevation: float, azimuth: float) -> None:
    angles = angular_resolution(builtin_config(band))
    assert angles.elevation_deg is not None
    assert angles.azimuth_deg is not None
    assert math.isclose(angles.elevation_deg, elevation, rel_tol=0.10)
    assert math.isclose(angles.azimuth_deg, azimuth, rel_tol=0.10)


@pytest.mark.parametrize(
    ("band", "vertical", "horizontal"),
    [("FR1", 0.03, 0.133), ("FR2", 0.032, 0.032), ("FR3", 0.032, 0.032)],
)
def test_slope_coefficients(band: str, vertical: float, horizontal: float) -> None:
    report = resolution_report(builtin_config(band))
    assert report.vertical_slope is not None
    assert report.horizontal_slope is not None
    assert math.isclose(report.vertical_slope, vertical, rel_tol=0.05)
    assert math.isclose(report.horizontal_slope, horizontal, rel_tol=0.05)


def test_horizontal_slope_is_exact(fr2: SystemConfig) -> None:
    report = resolution_report(fr2)
    assert math.isclose(report.horizontal_slope or 0.0, 2 / 63, rel_tol=1e-12)


@pytest.mark.parametrize(
    ("band", "range_m", "speed_mps"),
    [("FR1", 5000.0, 600.7), ("FR2", 1250.0, 300.3), ("FR3", 2500.0, 600.6)],
)
def test_unambiguous_limits(band: str, range_m: float, speed_mps: float) -> None:
    limits = unambiguous_limits(builtin_config(band))
    assert math.isclose(limits.range_m, range_m, rel_tol=1e-3)
    assert math.isclose(limits.speed_mps, speed_mps, rel_tol=0.01)


def test_off_boresight_resolution_degrades(fr2: SystemConfig) -> None:
    boresight = angular_resolution(fr2)
    steered = angular_resolution(fr2, azimuth_deg=45.0)
    assert steered.azimuth_deg is not None
    assert boresight.azimuth_deg is not None
    assert steered.azimuth_deg > boresight.azimuth_deg
    expected = math.degrees(math.asin(math.sin(math.radians(45.0)) + 2 / 63)) - 45.0
    assert math.isclose(steered.azimuth_deg, expected, rel_tol=1e-12)


def test_one_unresolvable_axis_keeps_the_other(fr2: SystemConfig) -> None:
    with capture_logs() as logs:
        angles = angular_resolution(fr2, azimuth_deg=89.0)
    assert angles.azimuth_deg is None
    assert angles.elevation_deg is not None
    assert math.isclose(angles.elevation_deg, math.degrees(math.asin(2 / 63)))
    assert any(entry["log_level"] == "warning" for entry in logs)


def test_unresolvable_steering(fr2: SystemConfig) -> None:
    with pytest.raises(FlextIsacSenseSteeringError) as exc_info:
        angular_resolution(fr2, azimuth_deg=90.0, elevation_deg=89.9)
    assert exc_info.value.context["module"] == "kpi-resolution"


def test_report_survives_unresolvable_steering(fr2: SystemConfig) -> None:
    report = resolution_report(fr2, azimuth_deg=89.0, range_m=10.0)
    assert report.azimuth_res_deg is None
    assert report.horizontal_m is None
    assert report.vertical_m is not None
    assert math.isclose(report.vertical_m, 10 * 2 / 63)
    assert "azimuth unresolvable at this steering" in report.warnings


def test_spatial_resolution_with_unresolvable_axis(fr2: SystemConfig) -> None:
    vertical, horizontal = spatial_resolution(fr2, 89.0, 0.0, 100.0)
    assert horizontal is None
    assert vertical is not None
    assert math.isclose(vertical, 100 * 2 / 63)


def test_requirement_on_unresolvable_axis_is_dropped(fr2: SystemConfig) -> None:
    assert resolution_limited_range(fr2, 89.0, 0.0, None, 1.0) == (None, None)
    vertical, horizontal = resolution_limited_range(fr2, 89.0, 0.0, 1.0, 1.0)
    assert horizontal is None
    assert vertical is not None
    assert math.isclose(vertical, 63 / 2)
    assert resolution_limited_range(fr2, 90.0, 89.9, 1.0, 1.0) == (None, None)


@pytest.mark.parametrize("use_resolution", [True, False])
def test_achievable_range_near_end_fire(fr1: SystemConfig, *, use_resolution: bool) -> None:
    target = Target(rcs_m2=1.0, range_m=100.0, azimuth_deg=89.0)
    limits = achievable_range(
        fr1,
        target,
        fr1.outdoor_power_w,
        requirements=Requirements(horizontal_resolution_m=1.0),
        use_resolution=use_resolution,
    )
    assert limits.resolution_m is None
    assert limits.horizontal_m is None
    assert limits.binding == "ambiguity"
    assert limits.achievable_m == unambiguous_limits(fr1).range_m


def test_spatial_resolution(fr2: SystemConfig) -> None:
    vertical, horizontal = spatial_resolution(fr2, 0.0, 0.0, 100.0)
    assert vertical is not None
    assert horizontal is not None
    assert math.isclose(vertical, 100 * 2 / 63, rel_tol=1e-12)
    assert math.isclose(horizontal, 100 * 2 / 63, rel_tol=1e-12)
    assert spatial_resolution(fr2, 0.0, 0.0, 0.0) == (0.0, 0.0)


def test_spatial_resolution_rejects_negative_range(fr2: SystemConfig) -> None:
    with pytest.raises(FlextIsacSenseValidationError):
        spatial_resolution(fr2, 0.0, 0.0, -1.0)


@pytest.mark.parametrize(
    ("band", "required", "expected", "tolerance"),
    [
        ("FR2", 2.5, 78.0, 0.02),
        ("FR2", 5.0, 156.0, 0.02),
        ("FR2", 1.0, 31.25, 0.02),
        ("FR1", 0.5, 3.8, 0.05),
        ("FR2", 0.5, 15.25, 0.04),
    ],
)
def test_use_case_resolution_ranges(
    band: str,
    required: float,
    expected: float,
    tolerance: float,
) -> None:
    _, horizontal = resolution_limited_range(builtin_config(band), 0.0, 0.0, None, required)
    assert horizontal is not None
    assert math.isclose(horizontal, expected, rel_tol=tolerance)


def test_resolution_limited_range_without_requirements(fr2: SystemConfig) -> None:
    assert resolution_limited_range(fr2, 0.0, 0.0) == (None, None)


def test_resolution_limited_range_rejects_zero(fr2: SystemConfig) -> None:
    with pytest.raises(FlextIsacSenseValidationError):
        resolution_limited_range(fr2, 0.0, 0.0, 0.0, None)


@pytest.mark.parametrize("band", BANDS)
def test_drone_detection_is_ambiguity_limited(band: str) -> None:
    cfg = builtin_config(band)
    drone = Target(name="drone", rcs_m2=0.1, range_m=100.0)
    limits = achievable_range(cfg, drone, cfg.outdoor_power_w, use_resolution=False)
    assert limits.binding == "ambiguity"
    assert limits.achievable_m == unambiguous_limits(cfg).range_m


def test_resolution_takes_the_more_lenient_axis(fr1: SystemConfig) -> None:
    target = Target(rcs_m2=1.0, range_m=10.0)
    requirements = Requirements(horizontal_resolution_m=0.5, vertical_resolution_m=0.5)
    limits = achievable_range(fr1, target, fr1.outdoor_power_w, requirements=requirements)
    assert limits.vertical_m is not None
    assert limits.horizontal_m is not None
    assert limits.vertical_m > limits.horizontal_m
    assert limits.resolution_m == limits.vertical_m
    assert limits.binding == "resolution"


def test_resolution_ignored_when_disabled(fr2: SystemConfig) -> None:
    target = Target(rcs_m2=1.0, range_m=10.0)
    requirements = Requirements(horizontal_resolution_m=1.0)
    limits = achievable_range(
        fr2,
        target,
        fr2.outdoor_power_w,
        requirements=requirements,
        use_resolution=False,
    )
    assert limits.resolution_m is None
    assert limits.horizontal_m is None
    assert not limits.use_resolution
    assert limits.binding == "ambiguity"


def test_quantization_can_bind(fr2: SystemConfig) -> None:
    target = Target(rcs_m2=0.01, range_m=10.0)
    wall = ClutterObject(rcs_m2=1000.0, range_m=1.0)
    limits = achievable_range(fr2, target, fr2.outdoor_power_w, clutter=[wall])
    assert limits.quantization_m is not None
    assert limits.binding == "quantization"
    assert limits.achievable_m == limits.quantization_m


def test_noise_can_bind(fr2: SystemConfig) -> None:
    target = Target(rcs_m2=1e-6, range_m=10.0)
    limits = achievable_range(fr2, target, 1e-3)
    assert limits.binding == "noise"
    assert limits.quantization_m is None
    assert limits.achievable_m == limits.noise_m


def test_equal_limits_bind_in_fixed_precedence(
    fr2: SystemConfig,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    monkeypatch.setattr(resolution_module, "max_range_noise", lambda *_, **__: 100.0)
    monkeypatch.setattr(resolution_module, "max_range_quant", lambda *_, **__: 100.0)
    monkeypatch.setattr(
        resolution_module,
        "resolution_limited_range",
        lambda *_, **__: (100.0, 100.0),
    )
    monkeypatch.setattr(
        resolution_module,
        "unambiguous_limits",
        lambda _: UnambiguousLimits(range_m=100.0, speed_mps=1.0),
    )
    limits = achievable_range(
        fr2,
        Target(rcs_m2=1.0, range_m=10.0),
        1.0,
        clutter=[ClutterObject(rcs_m2=1.0, range_m=1.0)],
        requirements=Requirements(horizontal_resolution_m=1.0),
    )
    assert limits.achievable_m == 100.0
    assert limits.binding == "noise"


@settings(max_examples=200, deadline=None)
@given(
    band=st.sampled_from(BANDS),
    rcs=st.floats(min_value=1e-3, max_value=1e3),
    horizontal=st.floats(min_value=0.05, max_value=20.0),
    vertical=st.none() | st.floats(min_value=0.05, max_value=20.0),
    clutter_rcs=st.none() | st.floats(min_value=1e-1, max_value=1e3),
    azimuth=st.floats(min_value=-60.0, max_value=60.0),
)
def test_resolution_constraint_never_extends_range(
    band: str,
    rcs: float,
    horizontal: float,
    vertical: float | None,
    clutter_rcs: float | None,
    azimuth: float,
) -> None:
    cfg = builtin_config(band)
    target = Target(rcs_m2=rcs, range_m=10.0, azimuth_deg=azimuth)
    clutter = [] if clutter_rcs is None else [ClutterObject(rcs_m2=clutter_rcs, range_m=5.0)]
    requirements = Requirements(
        horizontal_resolution_m=horizontal,
        vertical_resolution_m=vertical,
    )
    with_resolution, without_resolution = (
        achievable_range(
            cfg,
            target,
            cfg.outdoor_power_w,
            clutter=clutter,
            requirements=requirements,
            use_resolution=flag,
        )
        for flag in (True, False)
    )
    assert with_resolution.achievable_m <= without_resolution.achievable_m
    present = [
        value
        for value in (
            with_resolution.noise_m,
            with_resolution.quantization_m,
            with_resolution.resolution_m,
            with_resolution.ambiguity_m,
        )
        if value is not None
    ]
    assert with_resolution.achievable_m == min(present)


@settings(max_examples=300, deadline=None)
@given(
    band=st.sampled_from(BANDS),
    azimuth=st.floats(min_value=-50.0, max_value=50.0),
    elevation=st.floats(min_value=-50.0, max_value=50.0),
    range_m=st.floats(min_value=1.0, max_value=1e4),
)
def test_resolution_limited_range_inverts_spatial_resolution(
    band: str,
    azimuth: float,
    elevation: float,
    range_m: float,
) -> None:
    cfg = builtin_config(band)
    vertical, horizontal = spatial_resolution(cfg, azimuth, elevation, range_m)
    assert vertical is not None
    assert horizontal is not None
    r_v, r_h = resolution_limited_range(cfg, azimuth, elevation, vertical, horizontal)
    assert r_v is not None
    assert r_h is not None
    assert math.isclose(r_v, range_m, rel_tol=1e-9)
    assert math.isclose(r_h, range_m, rel_tol=1e-9)
