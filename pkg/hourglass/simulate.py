# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Run a timed word on an hourglass automaton.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .model_files import automaton_or_exit, word_or_exit
from .semantics import run_word
from .utils import format_rational, warn

REJECT_STATUS = 3


def simulate(config):
    """
    Print ACCEPT with the elapsed time and flip count, or REJECT.

    :param config: config object, with the parsed arguments in ``args``
    :returns: 0 on acceptance, 3 on rejection
    """
    args = config['args']
    automaton = automaton_or_exit(args.file)
    word = word_or_exit(args.word)
    trace = run_word(automaton, word)
    if args.trace:
        for state in trace.states:
            print(state)
    if trace.accepting:
        print(
            f'ACCEPT elapsed={format_rational(trace.elapsed)} '
            f'flips={trace.flips}')
        return 0
    print(f'REJECT at step {trace.failed_step}')
    if trace.reason:
        warn(trace.reason)
    return REJECT_STATUS
