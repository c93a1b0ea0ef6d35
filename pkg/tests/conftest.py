"""Test configuration for flext-isac-sense.

Provides built-in system configurations, radar objects and scenario
documents written to temporary files.


Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import json
from collections.abc import Callable, Generator
from pathlib import Path

import pytest
import structlog

from flext_isac_sense import (
    SystemConfig,
    Target,
    builtin_config,
    configure_logging,
)


# Logging setup
@pytest.fixture(autouse=True)
def quiet_logging() -> Generator[None]:
    """Log warnings and above; restore structlog defaults afterwards."""
    configure_logging("warning")
    yield
    structlog.reset_defaults()


# System configuration fixtures
@pytest.fixture
def fr1() -> SystemConfig:
    """Built-in FR1 parameterization."""
    return builtin_config("FR1")


@pytest.fixture
def fr2() -> SystemConfig:
    """Built-in FR2 parameterization."""
    return builtin_config("FR2")


@pytest.fixture
def fr3() -> SystemConfig:
    """Built-in FR3 parameterization."""
    return builtin_config("FR3")


@pytest.fixture
def human() -> Target:
    """A pedestrian at 100 m on boresight."""
    return Target(name="human", rcs_m2=1.0, range_m=100.0)


@pytest.fixture
def custom_system_document() -> dict[str, object]:
    """A SystemConfig JSON document for a 3.5 GHz small cell."""
    return {
        "band": "custom",
        "carrier_frequency_hz": 3.5e9,
        "subcarrier_spacing_hz": 30e3,
        "subcarrier_count": 3276,
        "symbol_duration_s": 35.67e-6,
        "noise_figure_db": 7.0,
        "element_gain_db": 3.0,
        "array": {
            "rows": 8,
            "cols": 8,
            "row_spacing_wavelengths": 0.5,
            "col_spacing_wavelengths": 0.5,
        },
        "outdoor_power_dbm": 40.0,
        "nominal_bandwidth_hz": 100e6,
    }


@pytest.fixture
def custom_system_file(tmp_path: Path, custom_system_document: dict[str, object]) -> Path:
    """The custom SystemConfig written to a temporary file."""
    path = tmp_path / "small-cell.json"
    path.write_text(json.dumps(custom_system_document), encoding="utf-8")
    return path


# Scenario document fixtures
@pytest.fixture
def scenario_document() -> dict[str, object]:
    """A minimal FR2 outdoor scenario."""
    return {
        "name": "crossing",
        "system": "FR2",
        "placement": "outdoor",
        "target": {"name": "human", "rcs_m2": 1.0, "range_m": 40.0},
        "requirements": {"horizontal_resolution_m": 1.0, "required_range_m": 40.0},
    }


@pytest.fixture
def write_scenario(tmp_path: Path) -> Callable[[dict[str, object]], Path]:
    """Write a scenario document and return its path."""

    def _write(document: dict[str, object], name: str = "scenario.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(document, indent=2), encoding="utf-8")
        return path

    return _write


# Pytest markers for test categorization
def pytest_configure(config: pytest.Config) -> None:
    """Configure pytest markers."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow tests")
    config.addinivalue_line("markers", "simulation: Periodogram simulator tests")
    config.addinivalue_line("markers", "cli: Command-line interface tests")
