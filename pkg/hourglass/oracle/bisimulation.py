# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Exhaustive comparison of hourglass and translated semantics.

Timed words are enumerated as a tree: every node extends its parent by one
delay on the grid followed by one action. Both semantics are advanced
together, so each node costs one step on each side. At every node the
hourglass states must coincide with the views of the translated states,
and both sides must agree on acceptance.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import math
from fractions import Fraction
from ..model import PreconditionError
from ..semantics import (
    DelayBlocked, GuardFailed, InvariantFailed, TimedStep, action_step,
    delay_step, initial_states)
from ..translation import (
    hourglass_view, translate, translated_initial_states,
    translated_successors)
from .report import SuiteReport, progress
from .sampling import random_automaton

BISIM_STREAM = 30


def _hourglass_successors(automaton, state, step):
    try:
        delayed = delay_step(
            state, step.delay, automaton.bounds,
            automaton.invariant(state.location))
    except DelayBlocked:
        return []
    if step.action is None:
        return [delayed]
    successors = []
    for _n, tr in automaton.outgoing(delayed.location, step.action):
        try:
            successors.append(action_step(delayed, tr, automaton))
        except (GuardFailed, InvariantFailed):
            continue
    return successors


class _WordTree:
    """Depth-first walk of the word tree of one automaton."""

    def __init__(self, automaton, max_len, grid, agree, correspond):
        self.automaton = automaton
        self.translated = translate(automaton)
        self.max_len = max_len
        top = math.floor((automaton.bounds.max_bound + 1) / grid)
        self.delays = [grid * k for k in range(top + 1)]
        self.actions = sorted(automaton.actions)
        self.agree = agree
        self.correspond = correspond

    def views(self, states):
        bounds = self.automaton.bounds
        return {
            (s.location, hourglass_view(s.valuation, s.directions, bounds),
             s.directions)
            for s in states}

    def compare(self, word, states, translated):
        final = self.automaton.final
        expected = {(s.location, s.valuation, s.directions) for s in states}
        self.correspond.record(
            expected == self.views(translated),
            lambda: f'word {_word_text(word)}: hourglass states '
                    f'{sorted(map(str, states))} differ from translated '
                    f'views')
        accepts = any(s.location in final for s in states)
        translated_accepts = any(s.location in final for s in translated)
        self.agree.record(
            accepts == translated_accepts,
            lambda: f'word {_word_text(word)}: hourglass '
                    f'{"accepts" if accepts else "rejects"}, translated '
                    f'{"accepts" if translated_accepts else "rejects"}')

    def advance(self, states, translated, step):
        next_states = {
            target for s in states
            for target in _hourglass_successors(self.automaton, s, step)}
        next_translated = {
            target for s in translated
            for _variant, target in translated_successors(
                self.translated, s, step)}
        return next_states, next_translated

    def walk(self, word, states, translated):
        self.compare(word, states, translated)
        if len(word) == self.max_len or not (states or translated):
            return
        for delay in self.delays:
            trailing = TimedStep(delay, None)
            if delay:
                self.compare(
                    word + (trailing,),
                    *self.advance(states, translated, trailing))
            for action in self.actions:
                step = TimedStep(delay, action)
                self.walk(
                    word + (step,),
                    *self.advance(states, translated, step))

    def run(self):
        self.walk(
            (),
            set(initial_states(self.automaton)),
            set(translated_initial_states(self.translated)))


def _word_text(word):
    steps = [
        f'{step.delay}' if step.action is None
        else f'{step.delay}.{step.action}'
        for step in word]
    return '(' + ' '.join(steps) + ')'


def _bisim(automaton, max_len, grid, agree, correspond):
    if len(automaton.clocks) > 2:
        raise PreconditionError(
            f'Bisimulation check needs two clocks or fewer, got '
            f'{len(automaton.clocks)}')
    grid = Fraction(grid)
    if grid <= 0:
        raise PreconditionError(f'Delay grid must be positive: {grid}')
    _WordTree(automaton, max_len, grid, agree, correspond).run()


def translation_bisim_check(automaton, max_len, grid):
    """
    Compare hourglass and translated semantics on every short timed word.

    Words have up to ``max_len`` steps, each a delay ``k * grid`` in
    ``[0, c_max + 1]`` followed by an action; a word may also end with a
    bare positive delay. A branch of the tree is cut when neither
    side has a live state.

    :param automaton: HourglassAutomaton with at most two clocks
    :param max_len: longest word
    :param grid: delay unit
    :returns: SuiteReport named ``bisimulation``
    """
    report = SuiteReport('bisimulation')
    agree = report.new_property('acceptance-agreement')
    correspond = report.new_property('state-correspondence')
    _bisim(automaton, max_len, grid, agree, correspond)
    return report


def random_bisim_batch(count, seed, max_len=3, grid=Fraction(1, 2),
                       clocks=2, max_locations=5, max_transitions=6,
                       max_bound=3, toggle_probability=0.15):
    """
    Bisimulation check on a batch of random automata.

    Automaton ``n`` is drawn with seed ``[seed, 30, n]``.

    :param count: number of automata
    :param seed: master seed
    :param max_len: longest word
    :param grid: delay unit
    :param clocks: number of clocks
    :param max_locations: largest number of locations
    :param max_transitions: largest number of transitions
    :param max_bound: largest clock bound
    :param toggle_probability: probability of toggling a clock
    :returns: SuiteReport named ``bisimulation-batch``
    """
    report = SuiteReport('bisimulation-batch')
    agree = report.new_property('acceptance-agreement')
    correspond = report.new_property('state-correspondence')
    for n in range(count):
        automaton = random_automaton(
            [seed, BISIM_STREAM, n], clocks=clocks,
            max_locations=max_locations, max_transitions=max_transitions,
            max_bound=max_bound, toggle_probability=toggle_probability)
        _bisim(automaton, max_len, grid, agree, correspond)
        progress('comparing semantics', n + 1, count)
    agree.details.append(
        f'{count} automata, words up to {max_len} steps, delay grid {grid}')
    return report
