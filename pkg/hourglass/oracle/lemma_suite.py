# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Randomized checks of the region equivalence properties.

Equivalent pairs are built by sampling a valuation on a grid and drawing a
random member of its region.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
from ..model import (
    CX, RELATIONS, DirectionMap, Guard, GuardAtom, apply_flip_update,
    apply_reset, make_clocks, satisfies)
from ..regions import (
    EquivalenceOptions, RegionError, delay_candidates, equivalent,
    equivalent_constraint_map_check, region_of)
from .report import SuiteReport, progress
from .sampling import (
    random_fraction, random_member, sample_valuation, trial_rng)

DEFAULT_GRID = Fraction(1, 16)


class _Sampler:
    """Draws the valuations of one trial."""

    def __init__(self, bounds, opts, grid, rng):
        self.bounds = bounds
        self.opts = opts
        self.grid = grid
        self.rng = rng

    def valuation(self):
        return sample_valuation(self.bounds, self.grid, self.rng)

    def member(self, valuation, opts=None):
        region = region_of(valuation, self.bounds, opts or self.opts)
        try:
            return random_member(region, self.bounds, self.rng)
        except RegionError:
            return valuation

    def pair(self, opts=None):
        v1 = self.valuation()
        return v1, self.member(v1, opts)

    def mixed_pair(self, trial):
        """Equivalent pair on even trials, independent pair on odd ones."""
        v1 = self.valuation()
        if trial % 2 == 0:
            return v1, self.member(v1)
        return v1, self.valuation()

    def subset(self, clocks):
        return frozenset(x for x in clocks if self.rng.random() < 0.5)

    def delay(self, top, denominator=64):
        return Fraction(
            int(self.rng.integers(0, top * denominator + 1)), denominator)


def _check_axioms(report, bounds, opts, trials, seed, grid):
    reflexive = report.new_property('reflexivity')
    symmetric = report.new_property('symmetry')
    transitive = report.new_property('transitivity')
    faithful = report.new_property('tuple-faithfulness')
    for trial in range(trials):
        sampler = _Sampler(bounds, opts, grid, trial_rng(seed, 0, trial))
        v1, v2 = sampler.mixed_pair(trial)
        reflexive.record(
            equivalent(v1, v1, bounds, opts), lambda: f'v={v1}')
        e12 = equivalent(v1, v2, bounds, opts)
        symmetric.record(
            e12 == equivalent(v2, v1, bounds, opts),
            lambda: f'v1={v1} v2={v2}')
        same_tuple = region_of(v1, bounds, opts) == region_of(v2, bounds, opts)
        faithful.record(
            same_tuple == e12, lambda: f'v1={v1} v2={v2}')
        v3 = sampler.member(v2) if trial % 4 < 2 else sampler.valuation()
        if e12 and equivalent(v2, v3, bounds, opts):
            transitive.record(
                equivalent(v1, v3, bounds, opts),
                lambda: f'v1={v1} v2={v2} v3={v3}')
        progress('axioms', trial + 1, trials)


def _check_integer_delay(prop, bounds, opts, trials, seed, stream, grid):
    top = bounds.max_bound + 1
    for trial in range(trials):
        sampler = _Sampler(bounds, opts, grid, trial_rng(seed, stream, trial))
        v1, v2 = sampler.pair()
        t = int(sampler.rng.integers(0, top + 1))
        prop.record(
            equivalent(v1.delayed(t), v2.delayed(t), bounds, opts),
            lambda: f'v1={v1} v2={v2} t={t}')


def _check_delay(prop, bounds, opts, directions, trials, seed, stream, grid):
    """Some delay of v2 matches any delay of v1."""
    running = directions.running_clocks()
    top = bounds.max_bound + 1
    for trial in range(trials):
        sampler = _Sampler(bounds, opts, grid, trial_rng(seed, stream, trial))
        v1, v2 = sampler.pair()
        t1 = sampler.delay(top)
        target = region_of(v1.delayed(t1, running), bounds, opts)
        delays = delay_candidates(v2, directions, target, bounds, opts)
        ok = bool(delays) and equivalent(
            v1.delayed(t1, running), v2.delayed(delays[0], running),
            bounds, opts)
        prop.record(ok, lambda: f'v1={v1} v2={v2} t1={t1}')
        progress(prop.name, trial + 1, trials)


def _check_updates(report, bounds, opts, trials, seed, grid):
    guard = report.new_property('guard')
    reset = report.new_property('reset')
    flip = report.new_property('flip')
    clocks = bounds.clocks
    for trial in range(trials):
        sampler = _Sampler(bounds, opts, grid, trial_rng(seed, 7, trial))
        rng = sampler.rng
        v1, v2 = sampler.pair()
        x = clocks[int(rng.integers(len(clocks)))]
        relation = list(RELATIONS)[int(rng.integers(len(RELATIONS)))]
        constant = int(rng.integers(0, bounds[x] + 2))
        atom = GuardAtom(x, relation, CX if constant > bounds[x] else constant)
        g = Guard((atom,))
        guard.record(
            satisfies(v1, g, bounds) == satisfies(v2, g, bounds),
            lambda: f'v1={v1} v2={v2} guard={atom}')
        lam = sampler.subset(clocks)
        reset.record(
            equivalent(
                apply_reset(v1, lam), apply_reset(v2, lam), bounds, opts),
            lambda: f'v1={v1} v2={v2} reset={sorted(map(str, lam))}')
        mu = frozenset(y for y in sampler.subset(clocks) if v1[y] <= bounds[y])
        flip.record(
            equivalent(
                apply_flip_update(v1, mu, bounds),
                apply_flip_update(v2, mu, bounds), bounds, opts),
            lambda: f'v1={v1} v2={v2} flip={sorted(map(str, mu))}')
        progress('guards and updates', trial + 1, trials)


def _check_constraint_map(prop, bounds, trials, seed, grid):
    clocks = bounds.clocks
    for trial in range(trials):
        rng = trial_rng(seed, 10, trial)
        valuation = sample_valuation(bounds, grid, rng)
        x = clocks[int(rng.integers(len(clocks)))]
        value = int(rng.integers(0, bounds[x])) + random_fraction(rng)
        valuation = valuation.updated({x: value})
        prop.record(
            equivalent_constraint_map_check(valuation, x, bounds),
            lambda: f'v={valuation} clock={x}')


def _three_clock_bounds(bounds):
    names = [x.name for x in bounds.clocks]
    extra = next(n for n in ('z', 'w', 'u', 'v') if n not in names)
    return make_clocks(
        [(x.name, c) for x, c in bounds.items()] + [(extra, bounds.max_bound)])


def check_lemma_suite(bounds, opts, trials, seed, delay_trials=None,
                      grid=DEFAULT_GRID):
    """
    Randomized checks of the equivalence axioms and of the closure of
    region equivalence under delays, guards, resets and flips.

    :param bounds: ClockBounds (two clocks for the closure properties)
    :param opts: EquivalenceOptions; with the half-point refinement, the
        delay closure is also checked with one clock stopped, and the fully
        refined relation with both clocks running is reported as a note
    :param trials: trials per property
    :param seed: master seed
    :param delay_trials: trials for the delay properties (default: trials)
    :param grid: grid for sampled valuations
    :returns: SuiteReport
    """
    if delay_trials is None:
        delay_trials = trials
    grid = Fraction(grid)
    report = SuiteReport('lemmas')
    _check_axioms(report, bounds, opts, trials, seed, grid)
    _check_integer_delay(
        report.new_property('integer-delay'),
        bounds, opts, trials, seed, 4, grid)
    _check_integer_delay(
        report.new_property('integer-delay-3-clocks'),
        _three_clock_bounds(bounds),
        EquivalenceOptions(opts.refine_half_points, max_clocks=None),
        trials, seed, 5, grid)
    coarse = EquivalenceOptions(False, opts.max_clocks)
    running = DirectionMap.initial(bounds.clocks)
    _check_delay(
        report.new_property('delay'),
        bounds, coarse, running, delay_trials, seed, 6, grid)
    _check_updates(report, bounds, opts, trials, seed, grid)
    _check_constraint_map(
        report.new_property('flip-constraint-map'), bounds, trials, seed, grid)
    if opts.refine_half_points and len(bounds) >= 2:
        refined = EquivalenceOptions(True, opts.max_clocks)
        stopped = running.toggle(bounds.clocks[1:])
        _check_delay(
            report.new_property('delay-stopped-clock'),
            bounds, refined, stopped, delay_trials, seed, 11, grid)
        note = report.new_property('delay-refined-both-running', note=True)
        _check_delay(
            note, bounds, refined, running, delay_trials, seed, 12, grid)
        note.details.append(
            'the fully refined relation is not closed under delay while '
            'both clocks run; half marks are tracked only while at most one '
            'clock runs')
    return report


def lemma_reports(bounds, trials, seed, delay_trials=None, grid=DEFAULT_GRID):
    """
    The lemma suite without and with the half-point refinement.

    :returns: SuiteReport named ``lemmas``; properties of the refined run
        are prefixed with ``refined/``
    """
    report = SuiteReport('lemmas')
    for prefix, refine in (('', False), ('refined/', True)):
        opts = EquivalenceOptions(refine_half_points=refine, max_clocks=2)
        report.extend(
            check_lemma_suite(
                bounds, opts, trials, seed, delay_trials, grid), prefix)
    return report
