# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tests for region equivalence and region operations.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction as F
import pytest
from hypothesis import assume, given, strategies as st
from hourglass.model import (
    ClockValuation, Direction, DirectionMap, PreconditionError, make_clocks)
from hourglass.regions import (
    EquivalenceOptions, HalfMark, NoTimeFlow, RegionError, equivalent,
    equivalent_constraint_map_check, region_apply_flip, region_apply_reset,
    region_count_bound, region_half_splits, region_of, representative,
    time_successor)

COARSE = EquivalenceOptions()
REFINED = EquivalenceOptions(refine_half_points=True)
ANY_CLOCKS = EquivalenceOptions(max_clocks=None)

TWO = make_clocks({'x': 2, 'y': 2})
ONE = make_clocks({'x': 2})


def _v(bounds, *values):
    return ClockValuation(dict(zip(bounds.clocks, values)))


@pytest.mark.parametrize('v1, v2, expected', [
    ((F(1, 4), F(1, 4)), (F(1, 8), F(1, 8)), True),
    ((F(1, 2), F(1, 2)), (F(1, 4), F(3, 4)), False),
    ((F(1, 4), F(3, 4)), (F(1, 4), F(5, 8)), False),
    ((F(1, 4), F(3, 4)), (F(3, 8), F(5, 8)), True),
    ((3, F(1, 2)), (F(5, 2), F(1, 2)), True),
    ((2, F(1, 2)), (F(5, 2), F(1, 2)), False),
    ((1, 0), (1, 0), True),
    ((F(3, 2), 0), (F(1, 2), 0), False),
])
def test_two_clock_equivalence(v1, v2, expected):
    assert equivalent(_v(TWO, *v1), _v(TWO, *v2), TWO, COARSE) == expected


def test_half_point_refinement():
    low, high = _v(ONE, F(1, 4)), _v(ONE, F(3, 4))
    assert equivalent(low, high, ONE, COARSE)
    assert not equivalent(low, high, ONE, REFINED)
    assert equivalent(low, _v(ONE, F(1, 3)), ONE, REFINED)
    # clocks above their bound carry no half mark
    assert equivalent(_v(ONE, F(13, 4)), _v(ONE, F(11, 4)), ONE, REFINED)


def test_three_clock_pair_is_equivalent():
    bounds = make_clocks({'x': 2, 'y': 2, 'z': 2})
    v1 = _v(bounds, F(2, 5), F(2, 5), F(4, 5))
    v2 = _v(bounds, F(1, 10), F(1, 10), F(19, 20))
    assert equivalent(v1, v2, bounds, COARSE)


@given(
    st.fractions(min_value=0, max_value=4),
    st.fractions(min_value=0, max_value=4),
    st.fractions(min_value=0, max_value=4),
    st.fractions(min_value=0, max_value=4))
def test_region_tuple_agrees_with_equivalence(a, b, c, d):
    v1, v2 = _v(TWO, a, b), _v(TWO, c, d)
    for opts in (COARSE, REFINED):
        same = region_of(v1, TWO, opts) == region_of(v2, TWO, opts)
        assert same == equivalent(v1, v2, TWO, opts)


def test_region_tuple_text():
    region = region_of(ClockValuation.zero(TWO.clocks), TWO, COARSE)
    assert str(region) == \
        'alpha=([0,0],[0,0]) beta=(1,2) gamma=(T) zeta=(2,1) eta=(2,1)'
    refined = region_of(_v(TWO, F(1, 2), 3), TWO, REFINED)
    assert 'half=(=,-)' in str(refined)
    assert str(refined.alpha[1]) == '(2,inf)'


@given(
    st.fractions(min_value=0, max_value=3),
    st.fractions(min_value=0, max_value=3))
def test_representative_lies_in_its_region(a, b):
    region = region_of(_v(TWO, a, b), TWO, COARSE)
    assert region_of(representative(region, TWO), TWO, COARSE) == region


def test_time_successor_chain_for_one_clock():
    dirs = DirectionMap.initial(ONE.clocks)
    region = region_of(ClockValuation.zero(ONE.clocks), ONE, COARSE)
    seen = [str(region.alpha[0])]
    for _n in range(6):
        region = time_successor(region, dirs, ONE, COARSE)
        seen.append(str(region.alpha[0]))
    assert seen == [
        '[0,0]', '(0,1)', '[1,1]', '(1,2)', '[2,2]', '(2,inf)', '(2,inf)']


def test_time_successor_chain_for_two_running_clocks():
    dirs = DirectionMap.initial(TWO.clocks)
    region = region_of(ClockValuation.zero(TWO.clocks), TWO, COARSE)
    chain = [region]
    for _n in range(12):
        region = time_successor(region, dirs, TWO, COARSE)
        chain.append(region)
    # the diagonal crosses the sum boundary at every half unit
    assert len(set(chain)) == 10
    assert chain[-1] == chain[-2] == chain[9]
    assert [str(r.alpha[0]) for r in chain[:10]] == [
        '[0,0]', '(0,1)', '(0,1)', '(0,1)', '[1,1]',
        '(1,2)', '(1,2)', '(1,2)', '[2,2]', '(2,inf)']
    assert chain[-1].alpha[0] == chain[-1].alpha[1]


def test_time_successor_of_paused_clocks():
    dirs = DirectionMap({ONE.clocks[0]: Direction.ZERO})
    region = region_of(ClockValuation.zero(ONE.clocks), ONE, COARSE)
    with pytest.raises(NoTimeFlow):
        time_successor(region, dirs, ONE, COARSE)


def test_time_successor_refuses_three_clocks():
    bounds = make_clocks({'x': 1, 'y': 1, 'z': 1})
    dirs = DirectionMap.initial(bounds.clocks)
    region = region_of(ClockValuation.zero(bounds.clocks), bounds, COARSE)
    with pytest.raises(RegionError):
        time_successor(region, dirs, bounds, COARSE)
    assert time_successor(region, dirs, bounds, ANY_CLOCKS) != region


def test_time_successor_follows_diagonal():
    dirs = DirectionMap.initial(TWO.clocks)
    region = region_of(_v(TWO, F(1, 4), F(1, 2)), TWO, COARSE)
    after = time_successor(region, dirs, TWO, COARSE)
    # the fractional parts sum to 1 before y reaches 1
    assert after == region_of(_v(TWO, F(3, 8), F(5, 8)), TWO, COARSE)
    after = time_successor(after, dirs, TWO, COARSE)
    assert after == region_of(_v(TWO, F(1, 2), F(3, 4)), TWO, COARSE)


def test_time_successor_with_paused_clock_meets_half_point():
    x, y = TWO.clocks
    dirs = DirectionMap({x: Direction.PLUS_ONE, y: Direction.ZERO})
    region = region_of(_v(TWO, F(1, 8), F(3, 4)), TWO, REFINED)
    after = time_successor(region, dirs, TWO, REFINED)
    assert after.half_mark(x) == HalfMark.BELOW
    assert after == region_of(_v(TWO, F(1, 4), F(3, 4)), TWO, REFINED)


def test_reset_and_flip_on_regions():
    region = region_of(_v(TWO, F(1, 4), F(3, 2)), TWO, COARSE)
    x, y = TWO.clocks
    assert region_apply_reset(region, {y}, TWO, COARSE) == \
        region_of(_v(TWO, F(1, 4), 0), TWO, COARSE)
    assert region_apply_flip(region, {x}, TWO, COARSE) == \
        region_of(_v(TWO, F(7, 4), F(3, 2)), TWO, COARSE)
    over = region_of(_v(TWO, 3, 0), TWO, COARSE)
    with pytest.raises(PreconditionError):
        region_apply_flip(over, {x}, TWO, COARSE)


@given(
    st.fractions(min_value=0, max_value=2),
    st.fractions(min_value=0, max_value=3))
def test_region_flip_twice_restores_region(a, b):
    x = TWO.clocks[0]
    for opts in (COARSE, REFINED):
        region = region_of(_v(TWO, a, b), TWO, opts)
        once = region_apply_flip(region, {x}, TWO, opts)
        assert once == region_of(_v(TWO, 2 - a, b), TWO, opts)
        assert region_apply_flip(once, {x}, TWO, opts) == region


def test_half_splits():
    x = ONE.clocks[0]
    region = region_of(_v(ONE, F(1, 4)), ONE, REFINED, untracked={x})
    assert region.half_mark(x) is None
    splits = region_half_splits(region, {x}, ONE)
    assert [s.half_mark(x) for s in splits] == [
        HalfMark.BELOW, HalfMark.HALF, HalfMark.ABOVE]
    point = region_of(_v(ONE, 1), ONE, REFINED, untracked={x})
    assert [s.half_mark(x) for s in region_half_splits(point, {x}, ONE)] \
        == [HalfMark.ZERO]


@given(
    st.fractions(min_value=0, max_value=2),
    st.fractions(min_value=0, max_value=2))
def test_flip_maps_order_to_sum_constraints(a, b):
    assume(a.denominator != 1)
    assert equivalent_constraint_map_check(_v(TWO, a, b), TWO.clocks[0], TWO)


def test_flip_constraint_check_above_bound():
    with pytest.raises(PreconditionError):
        equivalent_constraint_map_check(_v(TWO, 3, 0), TWO.clocks[0], TWO)


@pytest.mark.parametrize('bounds, expected', [
    ({'x': 1}, 16),
    ({'x': 2}, 24),
    ({'x': 1, 'y': 1}, 5184),
    ({'x': 7, 'y': 11}, 124416),
])
def test_region_count_bound(bounds, expected):
    assert region_count_bound(make_clocks(bounds)) == expected
