# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Read and write timed words in the ``.word`` format.

One step per line, ``delay <rational>`` or ``action <label>``; ``#``
starts a comment. Consecutive delays add up, an action with no delay
before it happens after a zero delay, and a final delay with no action
after it lets time pass at the end of the run. Rationals are ``p/q``,
integers or finite decimals.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
from ..semantics import TimedStep, TimedWord
from ..utils import format_rational, parse_rational
from .tokens import ParseError, TokenStream, TokenType, source_lines


def _delay(stream):
    token = stream.current
    if token.type not in (TokenType.NUMBER, TokenType.RATIONAL):
        raise ParseError(f'unexpected {token}', token.span, 'a rational')
    stream.next()
    try:
        return parse_rational(token.text)
    except ValueError as e:
        raise ParseError(str(e), token.span) from e


def parse_word(text):
    """
    Parse a timed word.

    :param text: file content, str or UTF-8 bytes
    :returns: TimedWord
    :raises ParseError: on the first error
    """
    steps = []
    pending = None
    for tokens in source_lines(text):
        stream = TokenStream(tokens)
        keyword = stream.expect(TokenType.NAME, expected='"delay" or "action"')
        if keyword.text == 'delay':
            delay = _delay(stream)
            pending = delay if pending is None else pending + delay
        elif keyword.text == 'action':
            label = stream.expect(TokenType.NAME, expected='an action label')
            steps.append(TimedStep(pending or Fraction(0), label.text))
            pending = None
        else:
            raise ParseError(
                f'unknown keyword "{keyword.text}"', keyword.span,
                '"delay" or "action"')
        stream.expect_end()
    if pending is not None:
        steps.append(TimedStep(pending, None))
    return TimedWord(tuple(steps))


def read_word(path):
    """
    Read a timed word from a file.

    :param path: path to a ``.word`` file
    :returns: TimedWord
    :raises OSError: if the file cannot be read
    :raises ParseError: if the file is not a valid word
    """
    with open(path, 'rb') as fp:
        return parse_word(fp.read())


def serialize_word(word, comment=None):
    """
    Text of a timed word, one ``delay`` line before every action.

    :param word: TimedWord
    :param comment: optional text for a leading ``#`` line
    :returns: str, ending with a newline
    """
    lines = [f'# {comment}'] if comment else []
    for step in word:
        lines.append(f'delay {format_rational(step.delay)}')
        if step.action is not None:
            lines.append(f'action {step.action}')
    return '\n'.join(lines) + '\n'


def write_word(path, word, comment=None):
    """Write a timed word to ``path``."""
    with open(path, 'w', encoding='utf8') as fp:
        fp.write(serialize_word(word, comment))
