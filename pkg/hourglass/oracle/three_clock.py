# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Region equivalence is not closed under delay with three clocks.

The valuations ``v1 = (2/5, 2/5, 4/5)`` and ``v2 = (1/10, 1/10, 19/20)``
(all bounds 2) are equivalent. After ``v1`` waits ``1/10`` the fractional
parts of ``x`` and ``y`` sum to exactly 1. ``v2`` can match this only by
waiting ``2/5``, but ``z`` leaves its unit interval after ``1/20``.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import math
from fractions import Fraction
from itertools import combinations
from ..model import (
    ClockValuation, DirectionMap, fractional_part, make_clocks)
from ..regions import (
    OVER, POINT, EquivalenceOptions, Interval, delay_candidates, equivalent,
    region_of)
from .report import SuiteReport

V1 = (Fraction(2, 5), Fraction(2, 5), Fraction(4, 5))
V2 = (Fraction(1, 10), Fraction(1, 10), Fraction(19, 20))
T1 = Fraction(1, 10)
SCAN_GRID = Fraction(1, 400)


def _valuation(bounds, values):
    return ClockValuation(dict(zip(bounds.clocks, values)))


def interval_window(start, target, bounds):
    """
    Delays keeping every clock of ``start`` in the interval it has in
    ``target``.

    Only open unit intervals are handled, which is all the counterexample
    needs.

    :param start: ClockValuation
    :param target: ClockValuation
    :param bounds: ClockBounds
    :returns: (low, high) with the window ``low <= t < high``, or None if
        some clock can never reach its target interval
    """
    low, high = Fraction(0), None
    for x in start.clocks:
        interval = Interval.of(target[x], bounds[x])
        if interval.kind in (POINT, OVER):
            return None
        low = max(low, interval.low - start[x])
        top = interval.low + 1 - start[x]
        high = top if high is None else min(high, top)
    if high is None or low >= high:
        return None
    return low, high


def sum_equality_delays(start, target):
    """
    Delays forced by the pairs whose fractional parts sum to 1 in
    ``target``, assuming no clock of ``start`` crosses an integer.

    :returns: list of ((x, y), delay)
    """
    forced = []
    for x, y in combinations(target.clocks, 2):
        if fractional_part(target[x]) + fractional_part(target[y]) != 1:
            continue
        total = fractional_part(start[x]) + fractional_part(start[y])
        forced.append(((x, y), (1 - total) / 2))
    return forced


def boundary_delays(start, horizon):
    """
    Delays in ``[0, horizon)`` at which ``start`` hits a region boundary:
    integer crossings and fractional sums reaching 1 or 2.
    """
    points = {Fraction(0)}
    fr = {x: fractional_part(start[x]) for x in start.clocks}
    for x in start.clocks:
        points.add(1 - fr[x])
    for x, y in combinations(start.clocks, 2):
        total = fr[x] + fr[y]
        points.update((k - total) / 2 for k in (1, 2))
    return sorted(t for t in points if 0 <= t < horizon)


def _check_analytic(report, v2, w1, bounds):
    prop = report.new_property('analytic-conflict')
    window = interval_window(v2, w1, bounds)
    forced = sum_equality_delays(v2, w1)
    low, high = window if window is not None else (None, None)
    prop.details.append(f'interval constraints: {low} <= t2 < {high}')
    conflict = window is not None and bool(forced)
    for (x, y), t2 in forced:
        prop.details.append(
            f'sum constraint fr({x}) + fr({y}) = 1: t2 = {t2}')
        conflict = conflict and not low <= t2 < high
    if conflict:
        prop.details.append(
            f'conflict: t2 = {forced[0][1]} is not below {high}')
    prop.record(
        conflict and high == Fraction(1, 20)
        and forced[0][1] == Fraction(2, 5),
        lambda: f'window={window} forced={forced}')


def _check_grid_scan(report, v2, w1, bounds, opts):
    prop = report.new_property('grid-scan')
    steps = math.floor(1 / SCAN_GRID)
    points = [SCAN_GRID * k for k in range(steps)]
    boundaries = boundary_delays(v2, Fraction(1))
    points.extend(t for t in boundaries if t not in points)
    prop.details.append(
        f't2 in [0, 1) on grid {SCAN_GRID} plus boundary delays '
        + ', '.join(map(str, boundaries)))
    for t2 in points:
        prop.record(
            not equivalent(w1, v2.delayed(t2), bounds, opts),
            lambda: f't2={t2} v2+t2={v2.delayed(t2)}')


def _check_region_walk(report, v2, w1, bounds, opts):
    prop = report.new_property('region-walk')
    running = DirectionMap.initial(bounds.clocks)
    target = region_of(w1, bounds, opts)
    delays = delay_candidates(v2, running, target, bounds, opts)
    prop.details.append(f'target region: {target}')
    prop.record(not delays, lambda: f'delays={list(map(str, delays))}')


def _check_two_clock_projection(report, opts):
    prop = report.new_property('two-clock-projection')
    bounds = make_clocks([('x', 2), ('y', 2)])
    v1 = _valuation(bounds, V1[:2])
    v2 = _valuation(bounds, V2[:2])
    w1 = v1.delayed(T1)
    running = DirectionMap.initial(bounds.clocks)
    target = region_of(w1, bounds, opts)
    delays = delay_candidates(v2, running, target, bounds, opts)
    ok = (
        equivalent(v1, v2, bounds, opts) and bool(delays)
        and equivalent(w1, v2.delayed(delays[0]), bounds, opts))
    if delays:
        prop.details.append(f'without z, t2 = {delays[0]} matches')
    prop.record(ok, lambda: f'v1={v1} v2={v2} delays={delays}')


def three_clock_counterexample():
    """
    Show that the delay property fails with three clocks.

    Four properties are reported: the two valuations are equivalent; the
    interval and sum constraints on the matching delay ``t2`` contradict
    each other (``t2 < 1/20`` against ``t2 = 2/5``); no delay on the grid
    1/400 in ``[0, 1)``, boundary delays included, matches; the region
    walk of ``v2`` never enters the region of ``v1 + 1/10``. A last
    property checks that the same pair restricted to two clocks does have
    a matching delay.

    :returns: SuiteReport named ``three-clock``
    """
    bounds = make_clocks([('x', 2), ('y', 2), ('z', 2)])
    opts = EquivalenceOptions(refine_half_points=False, max_clocks=None)
    v1 = _valuation(bounds, V1)
    v2 = _valuation(bounds, V2)
    w1 = v1.delayed(T1)
    report = SuiteReport('three-clock')
    prop = report.new_property('v1-equivalent-v2')
    prop.details.append(f'v1={v1} v2={v2} bounds={bounds}')
    prop.details.append(f'v1 + {T1} = {w1}')
    prop.record(equivalent(v1, v2, bounds, opts), f'v1={v1} v2={v2}')
    _check_analytic(report, v2, w1, bounds)
    _check_grid_scan(report, v2, w1, bounds, opts)
    _check_region_walk(report, v2, w1, bounds, opts)
    _check_two_clock_projection(report, opts)
    return report
