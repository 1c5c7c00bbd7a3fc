# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Random valuations, region members and automata for the oracles.

Seed protocol: every trial draws from its own generator,
``numpy.random.default_rng([seed, stream, trial])``, where ``stream``
identifies the property being checked. Reports therefore do not depend on
the order in which trials are run.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import math
from fractions import Fraction
import numpy as np
from ..model import (
    CX, RELATIONS, ClockValuation, Guard, GuardAtom, HourglassAutomaton,
    PreconditionError, Transition, make_clocks)
from ..regions import (
    OVER, POINT, EquivalenceOptions, HalfMark, region_of, representative)

HALF = Fraction(1, 2)
CLOCK_NAMES = ('x', 'y', 'z', 'w')
ACTION_NAMES = ('a', 'b', 'c')


def trial_rng(seed, stream, trial):
    """Generator for one trial of one property."""
    return np.random.default_rng([seed, stream, trial])


def sample_valuation(bounds, grid, seed):
    """
    Uniform valuation on a grid.

    :param bounds: ClockBounds
    :param grid: positive rational step
    :param seed: seed (or Generator) for ``numpy.random.default_rng``
    :returns: ClockValuation with every value ``k * grid`` in
        ``[0, c_x + 1]``
    """
    grid = Fraction(grid)
    if grid <= 0:
        raise PreconditionError(f'Grid step must be positive: {grid}')
    rng = np.random.default_rng(seed)
    values = {}
    for x, bound in bounds.items():
        top = math.floor((bound + 1) / grid)
        values[x] = grid * int(rng.integers(0, top + 1))
    return ClockValuation(values)


def random_fraction(rng, low=Fraction(0), high=Fraction(1)):
    """Random rational strictly between ``low`` and ``high``."""
    denominator = int(rng.integers(2, 97))
    numerator = int(rng.integers(1, denominator))
    return low + (high - low) * Fraction(numerator, denominator)


def _half_range(mark, low):
    if mark == HalfMark.BELOW:
        return low, HALF
    if mark == HalfMark.ABOVE:
        return max(low, HALF), Fraction(1)
    return low, Fraction(1)


def _sum_partner(region, clock, assigned):
    """An assigned clock whose fractional part sums to 1 with ``clock``."""
    n = region.clocks.index(clock)
    zeta, eta = region.zeta[n], region.eta[n]
    for y in assigned:
        rank = region.beta[region.clocks.index(y)]
        if y != clock and zeta < rank <= eta and assigned[y] > 0:
            return y
    return None


def _draw_member(region, bounds, rng):
    ranked = sorted(
        (b, x) for x, b in zip(region.clocks, region.beta) if b is not None)
    fr = {}
    previous = None
    for rank, x in ranked:
        mark = region.half_mark(x)
        partner = _sum_partner(region, x, fr)
        if region.interval(x).kind == POINT:
            fr[x] = Fraction(0)
        elif previous is not None and region.gamma[rank - 2]:
            fr[x] = fr[previous]
        elif partner is not None:
            fr[x] = 1 - fr[partner]
        elif mark == HalfMark.HALF:
            fr[x] = HALF
        else:
            low = fr[previous] if previous is not None else Fraction(0)
            low, high = _half_range(mark, low)
            if low >= high:
                return None
            fr[x] = random_fraction(rng, low, high)
        previous = x
    values = {}
    for x, interval in zip(region.clocks, region.alpha):
        if interval.kind == OVER:
            values[x] = interval.low + 2 * random_fraction(rng)
        else:
            values[x] = interval.low + fr[x]
    return ClockValuation(values)


def random_member(region, bounds, rng, attempts=50):
    """
    Random valuation in a region.

    Fractional parts are drawn in rank order, copying tied values and
    mirroring values whose sum must be 1. After ``attempts`` misses the
    grid representative is returned.

    :param region: RegionTuple
    :param bounds: ClockBounds
    :param rng: numpy Generator
    :param attempts: number of draws
    :returns: ClockValuation whose region is ``region``
    """
    opts = EquivalenceOptions(
        refine_half_points=region.refined, max_clocks=None)
    for _n in range(attempts):
        valuation = _draw_member(region, bounds, rng)
        if valuation is not None and region_of(
                valuation, bounds, opts, region.untracked) == region:
            return valuation
    return representative(region, bounds)


def guard_atoms(clocks, constants=(0, CX)):
    """All atoms over ``clocks`` with the given constants."""
    return [
        GuardAtom(x, relation, constant)
        for x in clocks for relation in RELATIONS for constant in constants
    ]


def _random_guard(rng, atoms, max_atoms):
    count = int(rng.integers(0, max_atoms + 1))
    return Guard(tuple(
        atoms[int(rng.integers(len(atoms)))] for _n in range(count)))


def random_automaton(seed, clocks=2, max_locations=5, max_transitions=6,
                     max_bound=3, toggle_probability=0.15,
                     flip_probability=0.3, invariant_probability=0.2):
    """
    Random hourglass automaton.

    Draws, in this order from ``numpy.random.default_rng(seed)``: the
    number of locations, the clock bounds, the final location, the location
    invariants, the number of transitions and then each transition (source,
    target, action, guard, flipped clocks, toggled clocks). Location ``l0``
    is the only initial location.

    :param seed: seed for ``numpy.random.default_rng``
    :param clocks: number of clocks
    :param max_locations: largest number of locations
    :param max_transitions: largest number of transitions
    :param max_bound: largest clock bound
    :param toggle_probability: probability that a transition toggles a
        given clock
    :param flip_probability: probability that a transition flips a given
        clock
    :param invariant_probability: probability that a location has an
        invariant
    :returns: HourglassAutomaton
    """
    rng = np.random.default_rng(seed)
    n_locations = int(rng.integers(1, max_locations + 1))
    locations = tuple(f'l{n}' for n in range(n_locations))
    bounds = make_clocks([
        (name, int(rng.integers(1, max_bound + 1)))
        for name in CLOCK_NAMES[:clocks]])
    atoms = guard_atoms(bounds.clocks)
    final = frozenset({locations[int(rng.integers(n_locations))]})
    invariants = []
    for loc in locations:
        if atoms and rng.random() < invariant_probability:
            invariants.append(
                (loc, Guard((atoms[int(rng.integers(len(atoms)))],))))
    transitions = []
    for _n in range(int(rng.integers(0, max_transitions + 1))):
        source = locations[int(rng.integers(n_locations))]
        target = locations[int(rng.integers(n_locations))]
        action = ACTION_NAMES[int(rng.integers(len(ACTION_NAMES)))]
        guard = _random_guard(rng, atoms, 2) if atoms else Guard()
        flip = frozenset(
            x for x in bounds.clocks if rng.random() < flip_probability)
        toggle = frozenset(
            x for x in bounds.clocks if rng.random() < toggle_probability)
        transitions.append(
            Transition(source, action, target, guard, flip, toggle))
    return HourglassAutomaton(
        actions=frozenset(ACTION_NAMES),
        locations=locations,
        initial=(locations[0],),
        final=final,
        bounds=bounds,
        invariants=tuple(invariants),
        transitions=tuple(transitions))
