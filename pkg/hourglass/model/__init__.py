# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Core model: clocks, valuations, directions, guards and automata.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .errors import ModelError, PreconditionError  # noqa
from .data_types import (  # noqa
    CX, HOURGLASS_MODE, EXTENDED_MODE, RELATIONS, TRUE,
    ClockId, ClockMap, ClockBounds, ClockValuation, Direction, DirectionMap,
    GuardAtom, Guard, Transition, HourglassAutomaton,
    TranslatedTransition, ExtendedTimedAutomaton,
    make_clocks, check_guard, validate_automaton)
from .valuations import (  # noqa
    fractional_part, satisfies, apply_reset, apply_flip_update)
