# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Run the brute-force oracles.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import os
from .model import PreconditionError, make_clocks
from .model_files import automaton_or_exit
from .oracle import (
    cross_check_emptiness, lemma_reports, random_bisim_batch,
    random_cross_check_batch, region_count_suite, three_clock_counterexample,
    translation_bisim_check)
from .utils import ExceptionExit, err_exit

SEED_VARIABLE = 'HGA_SEED'
CLOCK_NAMES = ('x', 'y', 'z')


def resolve_seed(config):
    """
    Master seed: ``--seed``, then ``$HGA_SEED``, then the config value.

    :param config: config object, with the parsed arguments in ``args``
    :returns: integer seed
    """
    seed = config['args'].seed
    if seed is not None:
        return seed
    env = os.environ.get(SEED_VARIABLE)
    if env:
        try:
            return int(env)
        except ValueError:
            err_exit(f'Invalid {SEED_VARIABLE}: "{env}"')
    return config['seed']


def _lemmas(config, seed, trials):
    bounds = make_clocks(zip(CLOCK_NAMES, config['clock_bounds']))
    trials = trials or config['lemma_trials']
    delay_trials = min(config['delay_trials'], trials)
    return lemma_reports(
        bounds, trials, seed, delay_trials, config['sample_grid'])


def _cross_check(config, seed, trials):
    return random_cross_check_batch(
        trials if trials is not None else config['random_automata'], seed,
        budget=config['explore_budget'], grid=config['explore_grid'],
        max_locations=config['max_locations'],
        max_transitions=config['max_transitions'],
        max_bound=config['max_bound'],
        toggle_probability=config['toggle_probability'])


def _bisimulation(config, seed, trials):
    return random_bisim_batch(
        trials if trials is not None else config['bisim_automata'], seed,
        max_len=config['bisim_max_len'], grid=config['bisim_grid'],
        max_locations=config['max_locations'],
        max_transitions=config['max_transitions'],
        max_bound=config['max_bound'],
        toggle_probability=config['toggle_probability'])


SUITES = {
    'three-clock': lambda config, seed, trials: three_clock_counterexample(),
    'lemmas': _lemmas,
    'regions': lambda config, seed, trials: region_count_suite(
        config['enumerate_grid']),
    'cross-check': _cross_check,
    'bisimulation': _bisimulation,
}


def _file_reports(config, seed):
    automaton = automaton_or_exit(config['args'].file)
    with ExceptionExit(exceptions=PreconditionError):
        return [
            cross_check_emptiness(
                automaton, config['explore_budget'], seed,
                config['explore_grid']),
            translation_bisim_check(
                automaton, config['bisim_max_len'], config['bisim_grid']),
        ]


def run_oracle(config):
    """
    Print the reports of the requested suites.

    :param config: config object, with the parsed arguments in ``args``
    :returns: 0 if every property passed, 1 otherwise
    """
    args = config['args']
    seed = resolve_seed(config)
    if args.trials is not None and args.trials < 1:
        err_exit('--trials must be at least 1')
    if args.file is not None:
        reports = _file_reports(config, seed)
    else:
        names = list(SUITES) if args.builtin == 'all' else [args.builtin]
        reports = [SUITES[name](config, seed, args.trials) for name in names]
    print('\n\n'.join(str(report) for report in reports))
    return 0 if all(report.passed for report in reports) else 1
