# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Concrete witnesses for region-graph paths.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from ..model import ClockValuation
from ..regions import (
    delay_candidates, region_of, untracked_clocks)
from ..semantics import (
    ConcreteState, DelayBlocked, GuardFailed, InvariantFailed, TimedWord,
    run_word)
from ..translation import translated_action_step, translated_delay
from .region_graph import DELAY, RegionState


class SoundnessError(RuntimeError):
    """A witness does not replay to acceptance."""


def _concrete_key(state, opts, bounds):
    untracked = untracked_clocks(state.directions, opts)
    return RegionState(
        state.location,
        region_of(state.valuation, bounds, opts, untracked),
        state.directions)


def _try_action(automaton, state, delay, variant):
    try:
        delayed = translated_delay(state, delay, automaton)
        return translated_action_step(delayed, variant, automaton)
    except (DelayBlocked, GuardFailed, InvariantFailed):
        return None


def _follow_path(graph, path):
    """
    Realize a path by walking a concrete valuation along it.

    :returns: list of (delay, action), or None if some step cannot be
        matched
    """
    automaton = graph.automaton
    bounds = automaton.bounds
    opts = graph.options.equivalence
    start = path[0].state
    state = ConcreteState(
        start.location, ClockValuation.zero(automaton.clocks),
        start.directions)
    target = start.region
    steps = []
    for step in path[1:]:
        if step.edge.kind == DELAY:
            target = step.state.region
            continue
        variant = automaton.transitions[step.edge.variant]
        reached = None
        for delay in delay_candidates(
                state.valuation, state.directions, target, bounds, opts):
            after = _try_action(automaton, state, delay, variant)
            if after is not None and _concrete_key(
                    after, opts, bounds) == step.state:
                reached = (delay, after)
                break
        if reached is None:
            return None
        delay, state = reached
        steps.append((delay, variant.action))
        target = step.state.region
    return steps


def extract_timed_witness(graph, path, automaton):
    """
    Turn a region-graph path into a timed word and replay it.

    :param graph: RegionGraph the path belongs to
    :param path: tuple of PathStep from an initial to a final state
    :param automaton: the HourglassAutomaton the graph was built from
    :returns: TimedWord accepted by ``automaton``
    :raises SoundnessError: if some step of ``path`` cannot be realized by a
        concrete valuation, or if the word does not replay to acceptance
    """
    steps = _follow_path(graph, path)
    if steps is None:
        raise SoundnessError(
            'Witness path has no concrete realization: '
            + ' -> '.join(step.state.location for step in path))
    word = TimedWord(tuple(steps))
    trace = run_word(automaton, word)
    if not trace.accepting:
        raise SoundnessError(
            f'Witness rejected at step {trace.failed_step}: {trace.reason}')
    return word
