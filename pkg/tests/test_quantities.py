"""Tests for dB conversions, value types and constants.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from flext_isac_sense import (
    C0,
    N0,
    FlextIsacSenseValidationError,
    GainDb,
    GainLinear,
    PowerDbm,
    PowerWatts,
    db_to_linear,
    dbm_to_watts,
    linear_to_db,
    watts_to_dbm,
)

pytestmark = pytest.mark.unit


def test_constants() -> None:
    assert C0 == 299_792_458.0
    assert math.isclose(N0, 10 ** (-17.4) * 1e-3, rel_tol=1e-12)


@pytest.mark.parametrize(
    ("db", "linear"),
    [(0.0, 1.0), (10.0, 10.0), (-3.0, 0.5011872336272722), (17.0, 50.11872336272722)],
)
def test_db_to_linear(db: float, linear: float) -> None:
    assert math.isclose(db_to_linear(db), linear, rel_tol=1e-12)


def test_dbm_to_watts() -> None:
    assert math.isclose(dbm_to_watts(30.0), 1.0)
    assert math.isclose(dbm_to_watts(49.0), 79.43282347242814, rel_tol=1e-12)
    assert math.isclose(watts_to_dbm(1e-3), 0.0, abs_tol=1e-12)


@pytest.mark.parametrize("value", [0.0, -1.0, math.inf, math.nan])
def test_linear_to_db_rejects_non_positive(value: float) -> None:
    with pytest.raises(FlextIsacSenseValidationError):
        linear_to_db(value)


@pytest.mark.parametrize("value", [math.inf, -math.inf, math.nan])
def test_db_to_linear_rejects_non_finite(value: float) -> None:
    with pytest.raises(FlextIsacSenseValidationError):
        db_to_linear(value)


@given(st.floats(min_value=-200.0, max_value=200.0))
def test_db_round_trip(db: float) -> None:
    assert math.isclose(linear_to_db(db_to_linear(db)), db, rel_tol=1e-9, abs_tol=1e-9)


def test_power_value_types() -> None:
    power = PowerDbm(value=36.0).to_watts()
    assert isinstance(power, PowerWatts)
    assert math.isclose(power.value, 3.981071705534973, rel_tol=1e-12)
    assert math.isclose(power.to_dbm(), 36.0)
    with pytest.raises(ValidationError):
        PowerWatts(value=0.0)


def test_gain_value_types() -> None:
    gain = GainDb(value=3.0103).to_linear()
    assert isinstance(gain, GainLinear)
    assert math.isclose(gain.value, 2.0, rel_tol=1e-4)
    assert math.isclose(GainLinear(value=100.0).to_db(), 20.0)
    with pytest.raises(ValidationError):
        GainLinear(value=-1.0)
