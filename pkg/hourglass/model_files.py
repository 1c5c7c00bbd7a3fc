# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Read model files for the commands, exiting on errors.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .sources import ParseError, read_automaton, read_word
from .utils import ExceptionExit


def automaton_or_exit(path):
    """
    Read an automaton; exit with status 1 if it cannot be read or parsed.

    :param path: path to a ``.hga`` file
    :returns: HourglassAutomaton
    """
    with ExceptionExit(
            additional_msg=f'Unable to read "{path}"',
            exceptions=(OSError, ParseError)):
        return read_automaton(path)


def word_or_exit(path):
    """
    Read a timed word; exit with status 1 if it cannot be read or parsed.

    :param path: path to a ``.word`` file
    :returns: TimedWord
    """
    with ExceptionExit(
            additional_msg=f'Unable to read "{path}"',
            exceptions=(OSError, ParseError)):
        return read_word(path)
