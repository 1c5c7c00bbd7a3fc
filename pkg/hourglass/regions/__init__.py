# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Clock regions for hourglass automata.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .region_tuple import (  # noqa
    POINT, OPEN, OVER, RegionError, NoTimeFlow, HalfMark, Interval,
    EquivalenceOptions, RegionTuple)
from .equivalence import (  # noqa
    equivalent, equivalent_constraint_map_check, region_of)
from .regionfunctions import (  # noqa
    representative, region_exists, untracked_clocks, next_event_delay,
    time_successor, region_apply_reset, region_apply_flip, region_satisfies,
    region_half_splits, region_forget_half, region_count_bound,
    delay_pieces, delay_candidates)
