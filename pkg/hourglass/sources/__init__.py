# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Model file formats: hourglass automata (``.hga``) and timed words
(``.word``).

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .tokens import (  # noqa
    SourceSpan, ParseError, ValidationError, TokenType, Token)
from .automaton import (  # noqa
    parse_automaton, read_automaton, serialize_automaton)
from .word import parse_word, read_word, serialize_word, write_word  # noqa
