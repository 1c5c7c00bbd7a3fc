# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Bounded random search for accepting runs.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import math
from fractions import Fraction
import numpy as np
from ..model import PreconditionError
from .data_types import (
    DelayBlocked, GuardFailed, InvariantFailed, RunTrace, TimedWord)
from .simulator import action_step, delay_step, initial_states


def _enabled(automaton, state):
    enabled = []
    for _n, tr in automaton.outgoing(state.location):
        try:
            enabled.append((tr, action_step(state, tr, automaton)))
        except (GuardFailed, InvariantFailed):
            continue
    return enabled


def random_explore(automaton, budget, seed, delay_grid, max_depth=None):
    """
    Random walk over the concrete semantics.

    Each step draws a delay ``k * delay_grid`` with ``k`` uniform in
    ``0..ceil((c_max + 1) / delay_grid)``, then one enabled transition
    uniformly. A walk restarts from a random initial state at a dead end or
    after ``max_depth`` steps.

    :param automaton: HourglassAutomaton
    :param budget: total number of steps
    :param seed: seed for ``numpy.random.default_rng``
    :param delay_grid: positive rational delay unit
    :param max_depth: walk length before a restart
        (default: twice the number of locations plus 4)
    :returns: accepting RunTrace, or None
    """
    grid = Fraction(delay_grid)
    if grid <= 0:
        raise PreconditionError(f'Delay grid must be positive: {grid}')
    starts = initial_states(automaton)
    for state in starts:
        if state.location in automaton.final:
            return RunTrace(TimedWord(), (state,), True, Fraction(0), 0)
    if not starts:
        return None
    if max_depth is None:
        max_depth = 2 * len(automaton.locations) + 4
    max_k = math.ceil((automaton.bounds.max_bound + 1) / grid)
    rng = np.random.default_rng(seed)
    steps = 0
    while steps < budget:
        state = starts[rng.integers(len(starts))]
        history = [state]
        word = []
        flips = 0
        while len(word) < max_depth and steps < budget:
            steps += 1
            delay = grid * int(rng.integers(0, max_k + 1))
            try:
                delayed = delay_step(
                    state, delay, automaton.bounds,
                    automaton.invariant(state.location))
            except DelayBlocked:
                break
            enabled = _enabled(automaton, delayed)
            if not enabled:
                break
            tr, state = enabled[rng.integers(len(enabled))]
            history += [delayed, state]
            word.append((delay, tr.action))
            flips += len(tr.flip)
            if state.location in automaton.final:
                word = TimedWord(tuple(word))
                return RunTrace(
                    word, tuple(history), True, word.elapsed, flips)
    return None
