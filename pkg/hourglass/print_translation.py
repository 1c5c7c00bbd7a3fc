# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Print the extended timed automaton of an hourglass automaton.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .model_files import automaton_or_exit
from .translation import translate


def translation_lines(translated):
    """
    Text of a translated automaton.

    Variants are numbered ``t<transition>.<variant>``; guards and
    invariants are read on the direction-resolved view, split atoms on the
    forward values.

    :param translated: ExtendedTimedAutomaton
    :returns: list of lines
    """
    clocks = ', '.join(f'{x}={c}' for x, c in translated.bounds.items())
    lines = [
        f'clocks: {clocks}',
        f'actions: {", ".join(sorted(translated.actions))}',
        f'locations: {", ".join(translated.locations)}',
        f'initial: {", ".join(translated.initial)}',
        f'final: {", ".join(sorted(translated.final))}'.rstrip(),
    ]
    for location, guard in translated.invariants:
        lines.append(f'invariant {location}: {guard}')
    counts = {}
    for variant in translated.transitions:
        n = counts.get(variant.origin, 0)
        counts[variant.origin] = n + 1
        lines.append(f't{variant.origin}.{n}: {variant}')
    return lines


def print_translation(config):
    """
    Print the translation of the automaton named on the command line.

    :param config: config object, with the parsed arguments in ``args``
    :returns: exit status
    """
    automaton = automaton_or_exit(config['args'].file)
    print('\n'.join(translation_lines(translate(automaton))))
    return 0
