# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Rational numbers from and to text.

Rationals are written ``p/q`` in lowest terms, or as integers. Finite
decimals are accepted on input.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import re
from fractions import Fraction

_RATIONAL = re.compile(r'[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)')


def parse_rational(string):
    """
    Convert a string to an exact rational.

    :param string: ``p/q``, an integer or a finite decimal
    :type string: str
    :return: the rational value
    :rtype: fractions.Fraction
    :raises ValueError: if the string is not a rational
    """
    text = str(string).strip()
    if not _RATIONAL.fullmatch(text):
        raise ValueError(f'Not a rational number: "{string}"')
    try:
        return Fraction(text)
    except ZeroDivisionError as e:
        raise ValueError(f'Zero denominator: "{string}"') from e


def rational_or_none(string):
    """
    Convert string to a rational, return None if conversion fails.

    :param string: Input string.
    :type string: str
    :return: Rational value or None.
    :rtype: fractions.Fraction or None
    """
    try:
        val = parse_rational(string)
    except (TypeError, ValueError):
        val = None
    return val


def format_rational(value):
    """Canonical text of a rational: ``p/q`` or an integer."""
    return str(Fraction(value))
