# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Concrete semantics of translated automata.

Clocks only move forward. A clock whose direction is +1 or -1 advances at
rate 1, a paused clock is frozen. Guards and invariants are read on the
hourglass view of the forward values (see :func:`hourglass_view`).

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
from ..model import (
    ClockValuation, DirectionMap, PreconditionError,
    apply_flip_update, apply_reset, satisfies)
from ..semantics import (
    ConcreteState, DelayBlocked, GuardFailed, InvariantFailed, RunTrace,
    blocking_instant)


def hourglass_view(valuation, directions, bounds):
    """
    Hourglass value of forward clocks.

    A clock facing forward (+1 or 0) shows ``min(u, c_x)``; a clock facing
    backwards (-1 or -0) shows ``max(c_x - u, 0)``.

    :param valuation: forward ClockValuation
    :param directions: DirectionMap
    :param bounds: ClockBounds
    :returns: ClockValuation within the clock bounds
    """
    view = {}
    for x, u in valuation.items():
        if directions[x].negative:
            view[x] = max(bounds[x] - u, 0)
        else:
            view[x] = min(u, bounds[x])
    return ClockValuation(view)


class DelayRule:
    """Delay rule of a translated automaton."""

    def __init__(self, clocks):
        self.clocks = tuple(clocks)

    @staticmethod
    def rate(direction):
        """Forward rate of a clock: 1 if running, 0 if paused."""
        return 1 if direction.running else 0

    def __call__(self, valuation, directions, delay):
        """
        Advance a forward valuation.

        :param valuation: ClockValuation
        :param directions: DirectionMap
        :param delay: non-negative rational
        :returns: ClockValuation
        """
        delay = Fraction(delay)
        if delay < 0:
            raise PreconditionError(f'Negative delay: {delay}')
        return valuation.updated({
            x: valuation[x] + self.rate(directions[x]) * delay
            for x in self.clocks})


def concretize_direction_semantics(automaton):
    """
    Delay rule for a translated automaton.

    :param automaton: ExtendedTimedAutomaton
    :returns: DelayRule
    """
    return DelayRule(automaton.clocks)


def translated_initial_states(automaton):
    """
    Initial states of a translated automaton.

    :param automaton: ExtendedTimedAutomaton
    :returns: list of ConcreteState
    """
    zero = ClockValuation.zero(automaton.clocks)
    directions = DirectionMap.initial(automaton.clocks)
    return [
        ConcreteState(loc, zero, directions)
        for loc in automaton.initial
        if satisfies(zero, automaton.invariant(loc), automaton.bounds)
    ]


def translated_delay(state, delay, automaton):
    """
    Delay step of a translated automaton.

    :param state: ConcreteState with a forward valuation
    :param delay: non-negative rational
    :param automaton: ExtendedTimedAutomaton
    :returns: ConcreteState
    :raises DelayBlocked: if the invariant is violated during the delay
    """
    rule = concretize_direction_semantics(automaton)
    bounds = automaton.bounds
    invariant = automaton.invariant(state.location)
    valuation, directions = state.valuation, state.directions
    delay = Fraction(delay)
    start = hourglass_view(valuation, directions, bounds)
    # the view of a running clock saturates once u reaches c_x
    checkpoints = sorted({
        bounds[x] - u for x, u in valuation.items()
        if directions[x].running and 0 < bounds[x] - u < delay})
    checkpoints.append(delay)
    for t in checkpoints:
        current = rule(valuation, directions, t)
        view = hourglass_view(current, directions, bounds)
        if not satisfies(view, invariant, bounds):
            instant = blocking_instant(start, view, invariant, bounds)
            raise DelayBlocked(
                f'Invariant "{invariant}" of {state.location} violated '
                f'at t={instant}', instant)
    return ConcreteState(state.location, current, directions)


def variant_enabled(state, variant, bounds):
    """
    Check the guard of a translated transition.

    :param state: ConcreteState with a forward valuation
    :param variant: TranslatedTransition
    :param bounds: ClockBounds
    :returns: True if both the hourglass guard (on the view) and the split
        atoms (on the raw values) hold
    """
    view = hourglass_view(state.valuation, state.directions, bounds)
    return (
        satisfies(view, variant.guard, bounds)
        and satisfies(state.valuation, variant.split, bounds))


def apply_variant_updates(valuation, variant, bounds):
    """Reset, then ``x := c_x - x`` on the remaining flipped clocks."""
    valuation = apply_reset(valuation, variant.resets)
    return apply_flip_update(valuation, variant.flip_updates, bounds)


def translated_action_step(state, variant, automaton):
    """
    Action step of a translated automaton.

    :param state: ConcreteState with a forward valuation
    :param variant: TranslatedTransition
    :param automaton: ExtendedTimedAutomaton
    :returns: ConcreteState
    :raises GuardFailed: if the variant is not enabled
    :raises InvariantFailed: if the target invariant does not hold
    """
    bounds = automaton.bounds
    if variant.source != state.location:
        raise PreconditionError(
            f'Transition from {variant.source} taken in {state.location}')
    if not variant_enabled(state, variant, bounds):
        raise GuardFailed(
            f'Guard "{variant.guard}" / "{variant.split}" does not hold')
    valuation = apply_variant_updates(state.valuation, variant, bounds)
    directions = variant.direction_delta(state.directions)
    target_invariant = automaton.invariant(variant.target)
    view = hourglass_view(valuation, directions, bounds)
    if not satisfies(view, target_invariant, bounds):
        raise InvariantFailed(
            f'Invariant "{target_invariant}" of {variant.target} '
            'does not hold')
    return ConcreteState(variant.target, valuation, directions)


def translated_successors(automaton, state, step):
    """
    Successors of a translated state under one timed step.

    :param automaton: ExtendedTimedAutomaton
    :param state: ConcreteState
    :param step: TimedStep
    :returns: list of (variant or None, ConcreteState)
    """
    try:
        delayed = translated_delay(state, step.delay, automaton)
    except DelayBlocked:
        return []
    if step.action is None:
        return [(None, delayed)]
    successors = []
    for _n, variant in automaton.outgoing(delayed.location, step.action):
        try:
            successors.append(
                (variant, translated_action_step(delayed, variant, automaton)))
        except (GuardFailed, InvariantFailed):
            continue
    return successors


def run_translated_word(automaton, word):
    """
    Run a timed word on a translated automaton.

    :param automaton: ExtendedTimedAutomaton
    :param word: TimedWord
    :returns: RunTrace over forward valuations
    """
    branches = [
        (s, (s,), 0) for s in translated_initial_states(automaton)]
    if not branches:
        return RunTrace(
            word, (), False, Fraction(0), 0, failed_step=0,
            reason='no admissible initial state')
    elapsed = Fraction(0)
    for k, step in enumerate(word, start=1):
        survivors = []
        seen = set()
        for state, history, flips in branches:
            for variant, successor in translated_successors(
                    automaton, state, step):
                if successor in seen:
                    continue
                seen.add(successor)
                flipped = len(variant.flipped) if variant is not None else 0
                survivors.append(
                    (successor, history + (successor,), flips + flipped))
        if not survivors:
            _state, history, flips = branches[0]
            return RunTrace(
                word, history, False, elapsed, flips, failed_step=k,
                reason='no enabled transition')
        branches = survivors
        elapsed += step.delay
    for state, history, flips in branches:
        if state.location in automaton.final:
            return RunTrace(word, history, True, elapsed, flips)
    _state, history, flips = branches[0]
    return RunTrace(
        word, history, False, elapsed, flips, failed_step=len(word),
        reason='run ends outside the final locations')
