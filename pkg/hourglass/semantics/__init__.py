# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Concrete operational semantics of hourglass automata.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .data_types import (  # noqa
    StepError, DelayBlocked, GuardFailed, InvariantFailed,
    ConcreteState, TimedStep, TimedWord, RunTrace)
from .simulator import (  # noqa
    initial_states, delay_step, action_step, run_word, blocking_instant)
from .explore import random_explore  # noqa
