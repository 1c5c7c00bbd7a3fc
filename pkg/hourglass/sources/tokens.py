# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tokenizer for the line-oriented model files.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import re
from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True, order=True)
class SourceSpan:
    """1-based line and column, 0-based byte offset."""
    line: int
    column: int
    offset: int

    def __str__(self):
        return f'line {self.line}, column {self.column}'


class ParseError(ValueError):
    """
    Syntax error in a model file.

    :param message: description, quoting the offending token
    :param span: SourceSpan of the offending token (None for errors about
        the whole file)
    :param expected: hint on what was expected
    """

    def __init__(self, message, span=None, expected=None):
        self.message = message
        self.span = span
        self.expected = expected
        text = message if span is None else f'{span}: {message}'
        if expected:
            text += f' (expected {expected})'
        super().__init__(text)


class ValidationError(ParseError):
    """Well-formed file describing an invalid model."""


class TokenType(Enum):
    """Token types."""
    NAME = 'name'
    NUMBER = 'number'
    RATIONAL = 'rational'
    RELATION = 'relation'
    ARROW = '->'
    COLON = ':'
    COMMA = ','
    EQUALS = '='
    AND = '&'
    LBRACE = '{'
    RBRACE = '}'
    END = 'end of line'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Token:
    """A token and where it starts."""
    type: TokenType
    text: str
    span: SourceSpan

    def __str__(self):
        if self.type == TokenType.END:
            return str(self.type)
        return f'"{self.text}"'


# longest alternatives first
_TOKEN_RE = re.compile(r'''
    (?P<space>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<rational>\d+/\d+|\d*\.\d+|\d+\.\d*)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<relation><=|>=|==|<|>)
  | (?P<arrow>->)
  | (?P<symbol>[:,=&{}])
''', re.VERBOSE)

_SYMBOLS = {
    ':': TokenType.COLON,
    ',': TokenType.COMMA,
    '=': TokenType.EQUALS,
    '&': TokenType.AND,
    '{': TokenType.LBRACE,
    '}': TokenType.RBRACE,
}
_KINDS = {
    'rational': TokenType.RATIONAL,
    'number': TokenType.NUMBER,
    'name': TokenType.NAME,
    'relation': TokenType.RELATION,
    'arrow': TokenType.ARROW,
}


def tokenize_line(line, lineno, offset):
    """
    Split one line into tokens, dropping blanks and comments.

    :param line: text of the line, without the newline
    :param lineno: 1-based line number
    :param offset: byte offset of the line start
    :returns: list of Token, ending with an END token
    :raises ParseError: on a character no token starts with
    """
    tokens = []
    pos = 0
    while pos < len(line):
        match = _TOKEN_RE.match(line, pos)
        span = SourceSpan(
            lineno, pos + 1, offset + len(line[:pos].encode('utf8')))
        if match is None:
            raise ParseError(f'unexpected character "{line[pos]}"', span)
        kind = match.lastgroup
        text = match.group()
        pos = match.end()
        if kind in ('space', 'comment'):
            continue
        if kind == 'symbol':
            tokens.append(Token(_SYMBOLS[text], text, span))
        else:
            tokens.append(Token(_KINDS[kind], text, span))
    end = SourceSpan(
        lineno, len(line) + 1, offset + len(line.encode('utf8')))
    tokens.append(Token(TokenType.END, '', end))
    return tokens


def source_lines(text):
    """
    Decode a model file and tokenize every non-blank line.

    :param text: str, or bytes in UTF-8
    :returns: generator of token lists (one per non-blank line)
    :raises ParseError: on undecodable bytes or unexpected characters
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode('utf8')
        except UnicodeDecodeError as e:
            raise ParseError(
                f'invalid UTF-8 at byte {e.start}',
                SourceSpan(1, 1, e.start)) from e
    offset = 0
    for lineno, line in enumerate(text.split('\n'), start=1):
        tokens = tokenize_line(line, lineno, offset)
        offset += len(line.encode('utf8')) + 1
        if len(tokens) > 1:
            yield tokens


class TokenStream:
    """Cursor over the tokens of one line."""

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self):
        """Token under the cursor."""
        return self.tokens[self.pos]

    def at_end(self):
        """True if only the END token is left."""
        return self.current.type == TokenType.END

    def peek_is(self, token_type, text=None):
        """True if the current token has this type (and text)."""
        token = self.current
        return token.type == token_type and (text is None or token.text == text)

    def next(self):
        """Consume and return the current token."""
        token = self.current
        if token.type != TokenType.END:
            self.pos += 1
        return token

    def expect(self, token_type, text=None, expected=None):
        """
        Consume a token of the given type.

        :param token_type: TokenType
        :param text: required token text, for keywords
        :param expected: hint used in the error message
        :returns: the Token
        :raises ParseError: if the current token does not match
        """
        if not self.peek_is(token_type, text):
            token = self.current
            hint = expected or (f'"{text}"' if text else str(token_type))
            raise ParseError(f'unexpected {token}', token.span, hint)
        return self.next()

    def accept(self, token_type, text=None):
        """Consume the current token if it matches; return it or None."""
        if self.peek_is(token_type, text):
            return self.next()
        return None

    def expect_end(self):
        """Require the end of the line."""
        self.expect(TokenType.END)
