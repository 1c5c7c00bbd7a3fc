# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Region equivalence of clock valuations.

Two valuations are equivalent when:

1. every clock lies in the same interval (same integer part, both integer
   or both not, or both above the bound);
2. for distinguishable clocks ``x != y``, ``fr(x) <= fr(y)`` holds in both
   or in neither;
3. for distinguishable clocks ``x != y``, ``fr(x) + fr(y)`` compares the
   same way against 1 in both;
4. with half-point refinement, ``fr(x)`` compares the same way against 1/2
   in both.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
from itertools import combinations
from ..model import PreconditionError, fractional_part
from .region_tuple import HalfMark, Interval, RegionTuple

HALF = Fraction(1, 2)


def _cmp(a, b):
    return (a > b) - (a < b)


def equivalent(v1, v2, bounds, opts):
    """
    Check region equivalence of two valuations.

    Works for any number of clocks.

    :param v1: ClockValuation
    :param v2: ClockValuation over the same clocks
    :param bounds: ClockBounds
    :param opts: EquivalenceOptions
    :returns: True if the valuations are equivalent
    """
    if v1.clocks != v2.clocks:
        raise PreconditionError('Valuations over different clocks')
    for x in v1.clocks:
        if Interval.of(v1[x], bounds[x]) != Interval.of(v2[x], bounds[x]):
            return False
    distinguishable = [x for x in v1.clocks if v1[x] <= bounds[x]]
    fr1 = {x: fractional_part(v1[x]) for x in distinguishable}
    fr2 = {x: fractional_part(v2[x]) for x in distinguishable}
    for x, y in combinations(distinguishable, 2):
        if _cmp(fr1[x], fr1[y]) != _cmp(fr2[x], fr2[y]):
            return False
        if _cmp(fr1[x] + fr1[y], 1) != _cmp(fr2[x] + fr2[y], 1):
            return False
    if opts.refine_half_points:
        for x in distinguishable:
            if _cmp(fr1[x], HALF) != _cmp(fr2[x], HALF):
                return False
    return True


def equivalent_constraint_map_check(valuation, clock, bounds):
    """
    Check that flipping ``clock`` maps ordering constraints to sum
    constraints.

    With ``v'(x) = c_x - v(x)`` and ``v(x)`` not an integer, for every other
    clock ``y``: ``fr(x) <= fr(y)`` iff ``fr'(x) + fr(y) >= 1``, and
    ``fr(y) <= fr(x)`` iff ``fr'(x) + fr(y) <= 1``. Integer values leave the
    fractional constraints unchanged.

    :param valuation: ClockValuation
    :param clock: the flipped clock
    :param bounds: ClockBounds
    :returns: True if both biconditionals hold for every other clock
    """
    value = valuation[clock]
    if value > bounds[clock]:
        raise PreconditionError(
            f'Flip of {clock} above its bound: {value} > {bounds[clock]}')
    fx = fractional_part(value)
    if fx == 0:
        return True
    flipped = fractional_part(bounds[clock] - value)
    for y in valuation.clocks:
        if y == clock:
            continue
        fy = fractional_part(valuation[y])
        if (fx <= fy) != (flipped + fy >= 1):
            return False
        if (fy <= fx) != (flipped + fy <= 1):
            return False
    return True


def region_of(valuation, bounds, opts, untracked=frozenset()):
    """
    Canonical region of a valuation.

    :param valuation: ClockValuation
    :param bounds: ClockBounds
    :param opts: EquivalenceOptions
    :param untracked: clocks whose half mark is left unrecorded
    :returns: RegionTuple
    """
    clocks = valuation.clocks
    alpha = tuple(Interval.of(valuation[x], bounds[x]) for x in clocks)
    distinguishable = [x for x in clocks if valuation[x] <= bounds[x]]
    fr = {x: fractional_part(valuation[x]) for x in distinguishable}
    order = sorted(distinguishable, key=lambda x: (fr[x], x.index))
    rank = {x: n for n, x in enumerate(order, start=1)}
    gamma = tuple(
        fr[order[n]] == fr[order[n + 1]] for n in range(len(order) - 1))
    zeta = []
    eta = []
    for x in clocks:
        if x not in rank:
            zeta.append(None)
            eta.append(None)
            continue
        others = [y for y in distinguishable if y != x]
        zeta.append(max(
            (rank[y] for y in others if fr[x] + fr[y] < 1), default=0))
        eta.append(max(
            (rank[y] for y in others if fr[x] + fr[y] <= 1), default=0))
    half = None
    if opts.refine_half_points:
        half = tuple(
            HalfMark.of(fr[x]) if x in rank and x not in untracked else None
            for x in clocks)
    return RegionTuple(
        clocks=clocks,
        alpha=alpha,
        beta=tuple(rank.get(x) for x in clocks),
        gamma=gamma,
        zeta=tuple(zeta),
        eta=tuple(eta),
        half=half)
