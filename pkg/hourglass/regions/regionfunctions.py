# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Operations on regions: representatives, time successors, guards and
updates.

Time is forward time: a clock advances at rate 1 unless it is paused.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import functools
import math
from fractions import Fraction
from itertools import combinations, product
from ..model import (
    ClockValuation, PreconditionError, apply_flip_update, apply_reset,
    fractional_part, satisfies)
from ..translation import hourglass_view
from .equivalence import HALF, region_of
from .region_tuple import (
    OPEN, OVER, POINT, EquivalenceOptions, HalfMark, NoTimeFlow, RegionError)

REPRESENTATIVE_DENOMINATOR = 16
# longest chain walked when realizing a delay
MAX_DELAY_EVENTS = 100000


def _region_options(region):
    return EquivalenceOptions(
        refine_half_points=region.refined, max_clocks=None)


@functools.lru_cache(maxsize=None)
def representative(region, bounds):
    """
    A valuation in ``region`` with denominator 16.

    Clocks above their bound get ``c_x + 1``. The fractional parts of the
    clocks in open intervals are searched on the grid ``k/16``.

    :param region: RegionTuple
    :param bounds: ClockBounds
    :returns: ClockValuation
    :raises RegionError: if the grid holds no member of the region
    """
    base = {}
    open_clocks = []
    for x, interval in zip(region.clocks, region.alpha):
        if interval.kind == OVER:
            base[x] = interval.low + 1
        else:
            base[x] = interval.low
            if interval.kind == OPEN:
                open_clocks.append(x)
    opts = _region_options(region)
    untracked = region.untracked
    fractions = [
        Fraction(k, REPRESENTATIVE_DENOMINATOR)
        for k in range(1, REPRESENTATIVE_DENOMINATOR)]
    for parts in product(fractions, repeat=len(open_clocks)):
        values = dict(base)
        for x, part in zip(open_clocks, parts):
            values[x] = base[x] + part
        valuation = ClockValuation(values)
        if region_of(valuation, bounds, opts, untracked) == region:
            return valuation
    raise RegionError(f'No representative on the 1/16 grid for {region}')


def region_exists(region, bounds):
    """True if ``region`` has a representative."""
    try:
        representative(region, bounds)
    except RegionError:
        return False
    return True


def untracked_clocks(directions, opts):
    """
    Clocks whose half mark is not tracked.

    Half marks are kept while at most one clock runs. Clocks running
    together move in lockstep and their marks are dropped.

    :param directions: DirectionMap
    :param opts: EquivalenceOptions
    :returns: frozenset of clocks
    """
    if not opts.refine_half_points:
        return frozenset()
    running = directions.running_clocks()
    return running if len(running) >= 2 else frozenset()


def next_event_delay(valuation, running, bounds, half_clocks=frozenset()):
    """
    Smallest positive delay at which a region boundary is met.

    Boundaries are: a running clock reaching an integer; a clock of
    ``half_clocks`` reaching 1/2; the fractional parts of two clocks
    summing to 1; a running clock catching up with the fractional part of a
    paused one.

    :param valuation: forward ClockValuation
    :param running: clocks advancing with time
    :param bounds: ClockBounds
    :param half_clocks: clocks whose 1/2 crossing counts as a boundary
    :returns: rational delay, or None if no boundary is ever met
    """
    distinguishable = [
        x for x in valuation.clocks if valuation[x] <= bounds[x]]
    fr = {x: fractional_part(valuation[x]) for x in distinguishable}
    events = []
    for x in distinguishable:
        if x not in running:
            continue
        events.append(1 - fr[x] if fr[x] > 0 else Fraction(1))
        if x in half_clocks and fr[x] < HALF:
            events.append(HALF - fr[x])
    for x, y in combinations(distinguishable, 2):
        moving = [z for z in (x, y) if z in running]
        if not moving:
            continue
        total = fr[x] + fr[y]
        if total < 1:
            events.append((1 - total) / len(moving))
        if len(moving) == 1:
            a = moving[0]
            b = y if a == x else x
            if fr[a] < fr[b]:
                events.append(fr[b] - fr[a])
    events = [e for e in events if e > 0]
    return min(events, default=None)


def time_successor(region, directions, bounds, opts):
    """
    Immediate time successor of a region.

    Half marks are tracked for the clocks that carry one in ``region``.

    :param region: RegionTuple
    :param directions: DirectionMap (paused clocks do not advance)
    :param bounds: ClockBounds
    :param opts: EquivalenceOptions
    :returns: RegionTuple; ``region`` itself if no boundary is ever met
    :raises NoTimeFlow: if every clock is paused
    :raises RegionError: if there are more clocks than ``opts.max_clocks``
    """
    if opts.max_clocks is not None and len(region.clocks) > opts.max_clocks:
        raise RegionError(
            f'Time successors are not sound for {len(region.clocks)} clocks')
    running = directions.running_clocks()
    if not running:
        raise NoTimeFlow('All clocks are paused')
    valuation = representative(region, bounds)
    untracked = region.untracked
    half_clocks = frozenset()
    if region.refined:
        half_clocks = region.distinguishable - untracked
    delay = next_event_delay(valuation, running, bounds, half_clocks)
    if delay is None:
        return region
    middle = region_of(
        valuation.delayed(delay / 2, running), bounds, opts, untracked)
    if middle != region:
        return middle
    return region_of(
        valuation.delayed(delay, running), bounds, opts, untracked)


def region_apply_reset(region, clocks, bounds, opts):
    """
    Region after resetting ``clocks``.

    :param region: RegionTuple
    :param clocks: clocks to reset
    :param bounds: ClockBounds
    :param opts: EquivalenceOptions
    :returns: RegionTuple
    """
    if not clocks:
        return region
    valuation = apply_reset(representative(region, bounds), clocks)
    return region_of(valuation, bounds, opts, region.untracked - set(clocks))


def region_apply_flip(region, clocks, bounds, opts):
    """
    Region after the update ``x := c_x - x`` on ``clocks``.

    :param region: RegionTuple
    :param clocks: clocks to update, none above its bound
    :param bounds: ClockBounds
    :param opts: EquivalenceOptions
    :returns: RegionTuple
    :raises PreconditionError: if a clock is above its bound
    """
    for x in clocks:
        if region.is_over(x):
            raise PreconditionError(f'Flip update on {x} above its bound')
    if not clocks:
        return region
    valuation = apply_flip_update(
        representative(region, bounds), clocks, bounds)
    return region_of(valuation, bounds, opts, region.untracked)


def region_satisfies(region, guard, bounds, directions=None):
    """
    Check a guard on a region.

    :param region: RegionTuple
    :param guard: Guard with integer constants up to the clock bounds
    :param bounds: ClockBounds
    :param directions: if given, the guard is read on the hourglass view
        of the forward values
    :returns: True if the members of the region satisfy the guard
    """
    valuation = representative(region, bounds)
    if directions is not None:
        valuation = hourglass_view(valuation, directions, bounds)
    return satisfies(valuation, guard, bounds)


def region_half_splits(region, clocks, bounds):
    """
    Split a region over the half marks of some untracked clocks.

    :param region: RegionTuple with half marks
    :param clocks: clocks whose half mark must be recorded
    :param bounds: ClockBounds
    :returns: list of non-empty RegionTuple, in a fixed order
    """
    clocks = sorted(x for x in clocks if x in region.untracked)
    if not clocks:
        return [region]
    choices = []
    for x in clocks:
        kind = region.interval(x).kind
        if kind == POINT:
            choices.append((HalfMark.ZERO,))
        else:
            choices.append((HalfMark.BELOW, HalfMark.HALF, HalfMark.ABOVE))
    splits = []
    for marks in product(*choices):
        candidate = region.with_half_marks(dict(zip(clocks, marks)))
        if region_exists(candidate, bounds):
            splits.append(candidate)
    return splits


def region_forget_half(region, clocks):
    """Drop the half marks of ``clocks``."""
    return region.with_half_marks({x: None for x in clocks})


def region_count_bound(bounds, n=None):
    """
    Upper bound on the number of regions.

    ``prod(2 (c_x + 1)) * n! * 2**(n-1) * (n+1)**n * (n+1)**n``

    :param bounds: ClockBounds
    :param n: number of clocks (default: number of bounds)
    :returns: integer
    """
    if n is None:
        n = len(bounds)
    if n < 1:
        raise PreconditionError('At least one clock is needed')
    intervals = math.prod(2 * (c + 1) for c in bounds.values())
    return (
        intervals * math.factorial(n) * 2 ** (n - 1)
        * (n + 1) ** n * (n + 1) ** n)


def delay_pieces(valuation, directions, bounds):
    """
    Walk the delay line of a concrete valuation.

    The line is cut at every region boundary, the half points of all
    clocks included. One point is yielded per boundary and one inside each
    piece, in increasing order; the walk ends one time unit after the last
    boundary.

    :param valuation: forward ClockValuation
    :param directions: DirectionMap (paused clocks do not advance)
    :param bounds: ClockBounds
    :returns: generator of (delay, ClockValuation)
    """
    running = directions.running_clocks()
    all_clocks = frozenset(valuation.clocks)
    elapsed = Fraction(0)
    current = valuation
    yield elapsed, current
    if not running:
        return
    for _n in range(MAX_DELAY_EVENTS):
        delay = next_event_delay(current, running, bounds, all_clocks)
        if delay is None:
            yield elapsed + 1, current.delayed(1, running)
            return
        yield elapsed + delay / 2, current.delayed(delay / 2, running)
        elapsed += delay
        current = current.delayed(delay, running)
        yield elapsed, current


def delay_candidates(valuation, directions, target, bounds, opts):
    """
    Delays taking a concrete valuation into ``target``.

    :param valuation: forward ClockValuation
    :param directions: DirectionMap (paused clocks do not advance)
    :param target: RegionTuple to reach
    :param bounds: ClockBounds
    :param opts: EquivalenceOptions used for ``target``
    :returns: list of rational delays, one per piece of the delay line
        lying in ``target`` (empty if ``target`` is not reached)
    """
    untracked = target.untracked
    candidates = []
    for delay, current in delay_pieces(valuation, directions, bounds):
        if region_of(current, bounds, opts, untracked) == target:
            candidates.append(delay)
        elif candidates:
            break
    return candidates
