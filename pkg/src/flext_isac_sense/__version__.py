"""Version information for flext-isac-sense package.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

__version__ = "0.9.0"
__version_info__ = (0, 9, 0)
