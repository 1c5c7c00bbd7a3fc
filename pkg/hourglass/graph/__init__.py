# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Region graphs and language emptiness.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .region_graph import (  # noqa
    DELAY, ACTION, RefusedError, RefusedUnsound, RefusedUnrefined,
    GraphOptions, RegionState, Edge, PathStep, RegionGraph,
    action_targets, build_region_graph)
from .witness import SoundnessError, extract_timed_witness  # noqa
from .emptiness import (  # noqa
    EMPTY, NONEMPTY, EmptinessResult, check_emptiness)
