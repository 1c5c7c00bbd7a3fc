# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tests for clocks, valuations, directions, guards and automata.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
import pytest
from hypothesis import given, strategies as st
from hourglass.model import (
    CX, EXTENDED_MODE, ClockValuation, Direction, DirectionMap, Guard,
    GuardAtom, HourglassAutomaton, ModelError, PreconditionError, Transition,
    apply_flip_update, apply_reset, fractional_part, make_clocks, satisfies)

rationals = st.fractions(min_value=0, max_value=1000)


def _automaton(guard, mode='hourglass'):
    bounds = make_clocks({'x': 7})
    atom = GuardAtom(bounds.clocks[0], '<=', guard)
    return HourglassAutomaton(
        actions=frozenset({'a'}),
        locations=('l0', 'l1'),
        initial=('l0',),
        final=frozenset({'l1'}),
        bounds=bounds,
        transitions=(Transition('l0', 'a', 'l1', Guard((atom,))),),
        mode=mode)


def test_fractional_part_examples():
    assert fractional_part(Fraction(7, 2)) == Fraction(1, 2)
    assert fractional_part(3) == 0
    assert fractional_part(Fraction(19, 20)) == Fraction(19, 20)


def test_fractional_part_rejects_negative():
    with pytest.raises(PreconditionError):
        fractional_part(Fraction(-1, 3))


@given(rationals)
def test_fractional_part_splits_value(t):
    fr = fractional_part(t)
    assert 0 <= fr < 1
    assert (t - fr).denominator == 1


@given(st.sampled_from(list(Direction)))
def test_flip_and_toggle_are_involutions(d):
    assert d.flipped().flipped() == d
    assert d.toggled().toggled() == d
    assert d.flipped().running == d.running
    assert d.toggled().negative == d.negative


def test_paused_clock_remembers_its_sign():
    assert Direction.ZERO.flipped() == Direction.MINUS_ZERO
    assert Direction.MINUS_ZERO.toggled() == Direction.MINUS_ONE


def test_flip_then_toggle():
    clocks = make_clocks({'x': 1, 'y': 1})
    x, y = clocks.clocks
    dirs = DirectionMap.initial(clocks.clocks).after_transition({x}, {x, y})
    assert dirs[x] == Direction.MINUS_ZERO
    assert dirs[y] == Direction.ZERO
    assert dirs.running_clocks() == frozenset()


def test_valuation_checks():
    clocks = make_clocks({'x': 2})
    with pytest.raises(ModelError):
        ClockValuation({clocks.clocks[0]: -1})
    other = make_clocks({'y': 2}).clocks[0]
    with pytest.raises(ModelError):
        ClockValuation.zero(clocks.clocks)[other]


def test_clock_bounds_must_be_positive_integers():
    with pytest.raises(ModelError):
        make_clocks({'x': 0})
    with pytest.raises(ModelError):
        make_clocks({'x': Fraction(3, 2)})


def test_guard_resolves_cx():
    bounds = make_clocks({'x': 7, 'y': 11})
    x, y = bounds.clocks
    v = ClockValuation({x: 7, y: 4})
    assert satisfies(v, Guard((GuardAtom(x, '==', CX),)), bounds)
    assert not satisfies(v, Guard((GuardAtom(y, '==', CX),)), bounds)
    assert satisfies(v, Guard(), bounds)
    assert str(Guard()) == 'true'
    assert str(Guard((GuardAtom(x, '>=', CX), GuardAtom(y, '<', 0)))) == \
        'x >= cx & y < 0'


def test_reset_and_flip_update():
    bounds = make_clocks({'x': 7, 'y': 11})
    x, y = bounds.clocks
    v = ClockValuation({x: 3, y: Fraction(5, 2)})
    assert apply_flip_update(v, {x}, bounds)[x] == 4
    assert apply_flip_update(v, {y}, bounds)[y] == Fraction(17, 2)
    assert apply_reset(v, {y})[y] == 0
    with pytest.raises(PreconditionError):
        apply_flip_update(ClockValuation({x: 8, y: 0}), {x}, bounds)


@given(
    st.fractions(min_value=0, max_value=7),
    st.fractions(min_value=0, max_value=11))
def test_flip_update_twice_restores_valuation(vx, vy):
    bounds = make_clocks({'x': 7, 'y': 11})
    x, y = bounds.clocks
    v = ClockValuation({x: vx, y: vy})
    once = apply_flip_update(v, {x}, bounds)
    assert 0 <= once[x] <= 7
    assert once[y] == vy
    assert apply_flip_update(once, {x}, bounds) == v


def test_clocks_with_different_names_differ():
    x = make_clocks({'x': 2}).clocks[0]
    y = make_clocks({'y': 2}).clocks[0]
    assert x.index == y.index
    assert x != y
    assert x == make_clocks({'x': 5}).clocks[0]


def test_hourglass_mode_only_allows_zero_and_cx():
    with pytest.raises(ModelError, match='constant must be 0 or cx'):
        _automaton(3)
    assert _automaton(0).transitions
    assert _automaton(CX).transitions


def test_extended_mode_allows_constants_up_to_bound():
    assert _automaton(3, EXTENDED_MODE).mode == EXTENDED_MODE
    with pytest.raises(ModelError, match='exceeds the bound'):
        _automaton(8, EXTENDED_MODE)


def test_undeclared_names_are_rejected(egg):
    with pytest.raises(ModelError):
        HourglassAutomaton(
            actions=egg.actions, locations=egg.locations,
            initial=('nowhere',), final=egg.final, bounds=egg.bounds)
    with pytest.raises(ModelError):
        HourglassAutomaton(
            actions=frozenset(), locations=egg.locations,
            initial=egg.initial, final=egg.final, bounds=egg.bounds,
            transitions=egg.transitions)


def test_automaton_lookups(egg):
    assert [x.name for x in egg.clocks] == ['x', 'y']
    assert egg.clock('y').index == 1
    with pytest.raises(ModelError):
        egg.clock('z')
    assert [n for n, _tr in egg.outgoing('seven')] == [1]
    assert egg.outgoing('boiling', 'done') == []
    assert not egg.has_toggles
