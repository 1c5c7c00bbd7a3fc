# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Reference simulator for hourglass automata.

Clocks are bounded to ``[0, c_x]``: a clock running forward stops at its
bound, a clock running backwards stops at zero, a paused clock keeps its
value.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
from typing import NamedTuple
from ..model import (
    TRUE, ClockMap, ClockValuation, Direction, DirectionMap,
    PreconditionError, satisfies)
from .data_types import (
    ConcreteState, DelayBlocked, GuardFailed, InvariantFailed, RunTrace)


def initial_states(automaton):
    """
    Initial states of an automaton.

    :param automaton: HourglassAutomaton
    :returns: list of ConcreteState, one per initial location whose
        invariant admits the all-zero valuation
    """
    zero = ClockValuation.zero(automaton.clocks)
    directions = DirectionMap.initial(automaton.clocks)
    return [
        ConcreteState(loc, zero, directions)
        for loc in automaton.initial
        if satisfies(zero, automaton.invariant(loc), automaton.bounds)
    ]


def _advance(valuation, directions, bounds, delay):
    changes = {}
    for x, value in valuation.items():
        d = directions[x]
        if d == Direction.PLUS_ONE:
            changes[x] = min(value + delay, bounds[x])
        elif d == Direction.MINUS_ONE:
            changes[x] = max(value - delay, 0)
    return valuation.updated(changes)


def _saturation_instants(valuation, directions, bounds, delay):
    instants = set()
    for x, value in valuation.items():
        d = directions[x]
        if d == Direction.PLUS_ONE:
            instants.add(bounds[x] - value)
        elif d == Direction.MINUS_ONE:
            instants.add(value)
    return sorted(t for t in instants if 0 < t < delay)


def blocking_instant(start, end, invariant, bounds):
    """
    First instant at which an invariant stops holding during a delay.

    Every clock moves at rate 1 (or stays put) from ``start`` to ``end``,
    so a violated atom is violated from the moment its clock crosses the
    atom's constant.

    :param start: valuation at the beginning of the delay
    :param end: valuation at which the invariant was found violated
    :param invariant: Guard
    :param bounds: ClockBounds
    :returns: rational instant, relative to the start of the delay
    """
    return min(
        abs(atom.resolve(bounds) - start[atom.clock])
        for atom in invariant.atoms
        if not atom.holds(end[atom.clock], bounds)
    )


def delay_step(state, delay, bounds, invariant=TRUE):
    """
    Let time elapse.

    :param state: ConcreteState
    :param delay: non-negative rational
    :param bounds: ClockBounds
    :param invariant: invariant of the current location
    :returns: ConcreteState after the delay
    :raises DelayBlocked: if the invariant is violated during the delay
    """
    delay = Fraction(delay)
    if delay < 0:
        raise PreconditionError(f'Negative delay: {delay}')
    valuation, directions = state.valuation, state.directions
    # the admissible set of a conjunctive invariant is convex
    checkpoints = _saturation_instants(valuation, directions, bounds, delay)
    checkpoints.append(delay)
    for t in checkpoints:
        current = _advance(valuation, directions, bounds, t)
        if not satisfies(current, invariant, bounds):
            instant = blocking_instant(valuation, current, invariant, bounds)
            raise DelayBlocked(
                f'Invariant "{invariant}" of {state.location} violated '
                f'at t={instant}', instant)
    return ConcreteState(state.location, current, directions)


def action_step(state, transition, automaton):
    """
    Take a transition.

    Flipped clocks reverse their direction, toggled clocks are paused or
    resumed. Clock values do not change.

    :param state: ConcreteState
    :param transition: Transition leaving ``state.location``
    :param automaton: HourglassAutomaton owning the transition
    :returns: ConcreteState in the target location
    :raises GuardFailed: if the guard does not hold
    :raises InvariantFailed: if the target invariant does not hold
    """
    if transition.source != state.location:
        raise PreconditionError(
            f'Transition from {transition.source} taken in {state.location}')
    bounds = automaton.bounds
    if not satisfies(state.valuation, transition.guard, bounds):
        raise GuardFailed(f'Guard "{transition.guard}" does not hold')
    target_invariant = automaton.invariant(transition.target)
    if not satisfies(state.valuation, target_invariant, bounds):
        raise InvariantFailed(
            f'Invariant "{target_invariant}" of {transition.target} '
            'does not hold')
    directions = state.directions.after_transition(
        transition.flip, transition.toggle)
    return ConcreteState(transition.target, state.valuation, directions)


class _Branch(NamedTuple):
    state: ConcreteState
    history: tuple
    flip_counts: ClockMap

    @property
    def flips(self):
        return sum(self.flip_counts.values())

    @property
    def key(self):
        return self.state, self.flip_counts


def _follow(automaton, branch, step):
    """Successor branches of ``branch`` under one timed step."""
    invariant = automaton.invariant(branch.state.location)
    try:
        delayed = delay_step(
            branch.state, step.delay, automaton.bounds, invariant)
    except DelayBlocked:
        return []
    if step.action is None:
        return [branch._replace(
            state=delayed, history=branch.history + (delayed,))]
    successors = []
    for _n, tr in automaton.outgoing(delayed.location, step.action):
        try:
            target = action_step(delayed, tr, automaton)
        except (GuardFailed, InvariantFailed):
            continue
        counts = branch.flip_counts
        successors.append(_Branch(
            target, branch.history + (delayed, target),
            counts.updated({x: counts[x] + 1 for x in tr.flip})))
    return successors


def _trace(word, branch, elapsed, failed_step=None, reason=''):
    return RunTrace(
        word, branch.history, failed_step is None, elapsed, branch.flips,
        failed_step=failed_step, reason=reason,
        flip_counts=branch.flip_counts)


def run_word(automaton, word):
    """
    Run a timed word on an automaton.

    Same-label transitions are explored exhaustively; the word is accepted
    if any branch ends in a final location. Branches reaching the same state
    with different flip counts are kept apart, and the reported accepting
    trace is the one with the fewest flips (the first one on ties).

    :param automaton: HourglassAutomaton
    :param word: TimedWord
    :returns: RunTrace
    """
    no_flips = ClockMap({x: 0 for x in automaton.clocks})
    branches = [
        _Branch(s, (s,), no_flips) for s in initial_states(automaton)]
    if not branches:
        return RunTrace(
            word, (), False, Fraction(0), 0, failed_step=0,
            reason='no admissible initial state', flip_counts=no_flips)
    elapsed = Fraction(0)
    for k, step in enumerate(word, start=1):
        survivors = {}
        for branch in branches:
            for successor in _follow(automaton, branch, step):
                survivors.setdefault(successor.key, successor)
        if not survivors:
            reason = (
                f'no enabled "{step.action}" transition'
                if step.action is not None else 'delay blocked')
            return _trace(word, branches[0], elapsed, k, reason)
        branches = list(survivors.values())
        elapsed += step.delay
    accepting = [
        branch for branch in branches
        if branch.state.location in automaton.final]
    if accepting:
        return _trace(
            word, min(accepting, key=lambda b: b.flips), elapsed)
    return _trace(
        word, branches[0], elapsed, len(word),
        'run ends outside the final locations')
