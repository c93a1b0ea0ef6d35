"""Centralized typings facade for flext-isac-sense.

- numpy array aliases used by the simulator
- literal types for bands, placements and periodogram axes


Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from typing import Literal

import numpy as np
import numpy.typing as npt

type FloatArray = npt.NDArray[np.float64]
type ComplexArray = npt.NDArray[np.complex128]

type BandName = Literal["FR1", "FR2", "FR3", "custom"]
type Placement = Literal["indoor", "outdoor"]
type PeriodogramAxes = Literal["range-doppler", "range-azimuth"]
type WindowName = Literal["rectangular", "hann"]
type BindingConstraint = Literal["noise", "quantization", "resolution", "ambiguity"]
type ReportFormat = Literal["md", "csv", "json"]

__all__ = [
    "BandName",
    "BindingConstraint",
    "ComplexArray",
    "FloatArray",
    "PeriodogramAxes",
    "Placement",
    "ReportFormat",
    "WindowName",
]
