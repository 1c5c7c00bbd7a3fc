# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Exhaustive enumeration of regions on a grid.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import math
from fractions import Fraction
from itertools import product
from ..model import ClockValuation, PreconditionError, make_clocks
from ..regions import EquivalenceOptions, region_count_bound, region_of
from .report import SuiteReport, progress

DEFAULT_GRID = Fraction(1, 16)


def enumerate_regions(bounds, opts, grid=DEFAULT_GRID):
    """
    Regions of every grid valuation in ``[0, c_x + 1]``.

    :param bounds: ClockBounds
    :param opts: EquivalenceOptions
    :param grid: positive rational step
    :returns: (set of RegionTuple, number of regions)
    """
    grid = Fraction(grid)
    if grid <= 0:
        raise PreconditionError(f'Grid step must be positive: {grid}')
    axes = [
        [grid * k for k in range(math.floor((c + 1) / grid) + 1)]
        for c in bounds.values()
    ]
    clocks = bounds.clocks
    total = math.prod(len(axis) for axis in axes)
    regions = set()
    for n, values in enumerate(product(*axes), start=1):
        valuation = ClockValuation(dict(zip(clocks, values)))
        regions.add(region_of(valuation, bounds, opts))
        if n % 1024 == 0 or n == total:
            progress('enumerating grid points', n, total)
    return regions, len(regions)


def region_count_report(bounds, grid=DEFAULT_GRID, name='regions'):
    """
    Check the region count of ``bounds`` against the bound formula.

    Properties: the unrefined count is within ``region_count_bound``;
    halving the grid adds no region; the half-point refinement never
    merges regions.

    :param bounds: ClockBounds
    :param grid: grid step
    :param name: suite name
    :returns: SuiteReport
    """
    grid = Fraction(grid)
    coarse = EquivalenceOptions(refine_half_points=False, max_clocks=None)
    fine = EquivalenceOptions(refine_half_points=True, max_clocks=None)
    report = SuiteReport(name)
    regions, count = enumerate_regions(bounds, coarse, grid)
    limit = region_count_bound(bounds)
    prop = report.new_property('count-within-bound')
    prop.details.append(
        f'bounds={bounds} grid={grid} regions={count} bound={limit}')
    prop.record(count <= limit, f'{count} > {limit}')
    prop = report.new_property('stable-under-refinement')
    finer, finer_count = enumerate_regions(bounds, coarse, grid / 2)
    prop.details.append(f'grid={grid / 2} regions={finer_count}')
    prop.record(
        finer == regions,
        lambda: f'{len(finer - regions)} new regions at grid {grid / 2}')
    prop = report.new_property('refined-at-least-unrefined')
    _refined, refined_count = enumerate_regions(bounds, fine, grid)
    prop.details.append(f'refined regions={refined_count}')
    prop.record(
        refined_count >= count, f'{refined_count} < {count}')
    return report


def region_count_suite(grid=DEFAULT_GRID):
    """Region counts for one clock with bound 1 and two clocks with bound 1."""
    report = SuiteReport('regions')
    report.extend(
        region_count_report(make_clocks([('x', 1)]), grid), 'one-clock/')
    report.extend(
        region_count_report(make_clocks([('x', 1), ('y', 1)]), grid),
        'two-clocks/')
    return report
