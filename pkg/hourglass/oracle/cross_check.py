# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Cross-check emptiness verdicts against concrete simulation.

Two properties are checked: every witness of a NONEMPTY verdict replays to
acceptance (soundness), and every automaton for which the random search
finds an accepting run is declared NONEMPTY (relative completeness).

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
from ..graph import GraphOptions, SoundnessError, check_emptiness
from ..model import PreconditionError
from ..semantics import random_explore, run_word
from ..sources import serialize_word
from .report import SuiteReport, progress
from .sampling import random_automaton

CROSS_CHECK_STREAM = 20
EXPLORE_STREAM = 21


def _one_line(word):
    return '; '.join(serialize_word(word).splitlines())


def _default_options(automaton):
    return GraphOptions(refine_half_points=automaton.has_toggles)


def _cross_check(automaton, budget, seed, grid, options, replay, complete,
                 label=''):
    if len(automaton.clocks) > 2:
        raise PreconditionError(
            f'Cross-check needs two clocks or fewer, got '
            f'{len(automaton.clocks)}')
    if options is None:
        options = _default_options(automaton)
    found = random_explore(automaton, budget, seed, grid)
    try:
        result = check_emptiness(automaton, options)
    except SoundnessError as e:
        replay.record(False, f'{label}{e}')
        return None, found
    if result.nonempty:
        trace = run_word(automaton, result.witness)
        replay.record(
            trace.accepting,
            lambda: f'{label}witness {_one_line(result.witness)} rejected '
                    f'at step {trace.failed_step}: {trace.reason}')
    if found is not None:
        complete.record(
            result.nonempty,
            lambda: f'{label}checker says EMPTY but '
                    f'{_one_line(found.word)} is accepted')
    return result, found


def cross_check_emptiness(automaton, budget, seed, grid=1, options=None):
    """
    Compare the emptiness verdict of one automaton with a random search.

    :param automaton: HourglassAutomaton with at most two clocks
    :param budget: steps of the random search
    :param seed: seed of the random search
    :param grid: delay unit of the random search
    :param options: GraphOptions (default: refinement iff the automaton
        toggles clocks)
    :returns: SuiteReport named ``cross-check``
    """
    report = SuiteReport('cross-check')
    replay = report.new_property('witness-replay')
    complete = report.new_property('relative-completeness')
    result, found = _cross_check(
        automaton, budget, seed, Fraction(grid), options, replay, complete)
    if result is not None:
        replay.details.append(
            f'verdict={result.verdict} states={result.stats["states"]} '
            f'edges={result.stats["edges"]}')
    complete.details.append(
        'random search found ' +
        ('no accepting run' if found is None
         else f'an accepting run: {_one_line(found.word)}'))
    return report


def random_cross_check_batch(count, seed, budget=10000, grid=1, clocks=2,
                             max_locations=5, max_transitions=6, max_bound=3,
                             toggle_probability=0.15):
    """
    Cross-check a batch of random automata.

    Automaton ``n`` is drawn with seed ``[seed, 20, n]`` and searched with
    seed ``[seed, 21, n]``.

    :param count: number of automata
    :param seed: master seed
    :param budget: steps of each random search
    :param grid: delay unit of the random search
    :param clocks: number of clocks (at most two)
    :param max_locations: largest number of locations
    :param max_transitions: largest number of transitions
    :param max_bound: largest clock bound
    :param toggle_probability: probability of toggling a clock
    :returns: SuiteReport named ``cross-check-batch``
    """
    report = SuiteReport('cross-check-batch')
    replay = report.new_property('witness-replay')
    complete = report.new_property('relative-completeness')
    grid = Fraction(grid)
    nonempty = found_runs = 0
    for n in range(count):
        automaton = random_automaton(
            [seed, CROSS_CHECK_STREAM, n], clocks=clocks,
            max_locations=max_locations, max_transitions=max_transitions,
            max_bound=max_bound, toggle_probability=toggle_probability)
        result, found = _cross_check(
            automaton, budget, [seed, EXPLORE_STREAM, n], grid, None,
            replay, complete, label=f'automaton {n}: ')
        nonempty += result is not None and result.nonempty
        found_runs += found is not None
        progress('cross-checking automata', n + 1, count)
    report.properties[0].details.append(
        f'{nonempty}/{count} automata declared NONEMPTY')
    report.properties[1].details.append(
        f'random search accepted {found_runs}/{count} automata')
    return report
