# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Decide language emptiness of an hourglass automaton.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import sys
from .graph import GraphOptions, RefusedError, SoundnessError, check_emptiness
from .model_files import automaton_or_exit
from .sources import write_word
from .utils import ExceptionExit, warn

REFUSED_STATUS = 2


def graph_options(config):
    """GraphOptions from the command line and the config file."""
    args = config['args']
    return GraphOptions(
        refine_half_points=args.refine or config['refine_half_points'],
        unsound=args.unsound or config['allow_unsound'])


def check(config):
    """
    Print EMPTY or NONEMPTY, and write the witness if requested.

    :param config: config object, with the parsed arguments in ``args``
    :returns: exit status
    """
    args = config['args']
    automaton = automaton_or_exit(args.file)
    with ExceptionExit(status=REFUSED_STATUS, exceptions=RefusedError), \
            ExceptionExit(
                additional_msg='Witness extraction failed',
                exceptions=SoundnessError):
        result = check_emptiness(automaton, graph_options(config))
    for warning in result.warnings:
        warn(warning)
    print(result.verdict)
    if args.stats:
        stats = result.stats
        sys.stderr.write(
            f'states={stats["states"]} edges={stats["edges"]} '
            f'seconds={stats["seconds"]:.3f}\n')
    if args.witness is not None:
        if result.nonempty:
            with ExceptionExit(
                    additional_msg=f'Unable to write "{args.witness}"',
                    exceptions=OSError):
                write_word(
                    args.witness, result.witness,
                    f'witness for {args.file}')
        else:
            warn('language is empty: no witness written')
    return 0
