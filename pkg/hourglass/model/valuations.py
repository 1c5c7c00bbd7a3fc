# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Exact operations on clock valuations.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import math
from fractions import Fraction
from .errors import ModelError, PreconditionError


def fractional_part(t):
    """
    Fractional component of a non-negative rational.

    :param t: rational, t >= 0
    :returns: fr(t), so that ``t == floor(t) + fr(t)``
    :raises PreconditionError: if t is negative
    """
    t = Fraction(t)
    if t < 0:
        raise PreconditionError(f'Negative time value: {t}')
    return t - math.floor(t)


def satisfies(valuation, guard, bounds):
    """
    Check whether a valuation satisfies a guard.

    :param valuation: ClockValuation
    :param guard: Guard
    :param bounds: ClockBounds, used to resolve ``cx``
    :returns: True if every atom holds
    :raises ModelError: if the guard mentions a clock not in the valuation
    """
    for atom in guard.atoms:
        if atom.clock not in valuation:
            raise ModelError(f'Unknown clock in guard: {atom.clock}')
        if not atom.holds(valuation[atom.clock], bounds):
            return False
    return True


def apply_reset(valuation, clocks):
    """Set ``clocks`` to zero."""
    return valuation.updated({x: 0 for x in clocks})


def apply_flip_update(valuation, clocks, bounds):
    """
    Apply ``x := c_x - x`` to every clock in ``clocks``.

    :param valuation: ClockValuation
    :param clocks: clocks to update
    :param bounds: ClockBounds
    :returns: new ClockValuation
    :raises PreconditionError: if some clock is above its bound
    """
    changes = {}
    for x in clocks:
        if valuation[x] > bounds[x]:
            raise PreconditionError(
                f'Flip update on {x} above its bound: '
                f'{valuation[x]} > {bounds[x]}')
        changes[x] = bounds[x] - valuation[x]
    return valuation.updated(changes)
