# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tests for the translation into extended timed automata.

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
    ClockValuation, Direction, DirectionMap, PreconditionError, make_clocks,
    satisfies)
from hourglass.oracle import translation_bisim_check
from hourglass.print_translation import translation_lines
from hourglass.semantics import TimedWord
from hourglass.sources import parse_automaton
from hourglass.translation import (
    DelayRule, hourglass_view, run_translated_word, translate,
    translate_transition)

TWO_FLIPS = """
clocks: x=2, y=3
locations: a, b
initial: a
final: b
trans a -> b on go flip {x, y}
"""


def test_variant_count(egg):
    translated = translate(egg)
    # two transitions flip one clock, one flips none
    assert len(translated.transitions) == 5
    assert [v.origin for v in translated.transitions] == [0, 0, 1, 1, 2]
    assert translated.locations == egg.locations
    assert translated.final == egg.final


def test_split_selects_reset_or_update(egg):
    x = egg.clock('x')
    below, at_bound = translate_transition(egg.transitions[0], 0)
    assert str(below.split) == 'x < cx'
    assert below.flip_updates == {x}
    assert below.resets == frozenset()
    assert str(at_bound.split) == 'x >= cx'
    assert at_bound.resets == {x}
    assert at_bound.flip_updates == frozenset()
    for variant in (below, at_bound):
        assert variant.flipped == {x}
        assert variant.guard == egg.transitions[0].guard


def test_every_subset_of_flipped_clocks_gets_a_variant():
    automaton = parse_automaton(TWO_FLIPS)
    variants = translate(automaton).transitions
    assert len(variants) == 4
    assert {v.resets for v in variants} == {
        frozenset(), frozenset({automaton.clock('x')}),
        frozenset({automaton.clock('y')}), frozenset(automaton.clocks)}


@given(
    st.fractions(min_value=0, max_value=5),
    st.fractions(min_value=0, max_value=5))
def test_exactly_one_split_variant_is_enabled(u, w):
    automaton = parse_automaton(TWO_FLIPS)
    x, y = automaton.clocks
    valuation = ClockValuation({x: u, y: w})
    enabled = [
        v for v in translate_transition(automaton.transitions[0], 0)
        if satisfies(valuation, v.split, automaton.bounds)]
    assert len(enabled) == 1
    assert enabled[0].resets == {
        z for z in automaton.clocks if valuation[z] >= automaton.bounds[z]}


@pytest.mark.parametrize('u, direction, expected', [
    (3, Direction.PLUS_ONE, 3),
    (9, Direction.PLUS_ONE, 7),
    (9, Direction.ZERO, 7),
    (3, Direction.MINUS_ONE, 4),
    (9, Direction.MINUS_ONE, 0),
    (Fraction(1, 2), Direction.MINUS_ZERO, Fraction(13, 2)),
])
def test_hourglass_view(u, direction, expected):
    bounds = make_clocks({'x': 7})
    x = bounds.clocks[0]
    view = hourglass_view(
        ClockValuation({x: u}), DirectionMap({x: direction}), bounds)
    assert view[x] == expected


@given(
    st.fractions(min_value=0, max_value=20),
    st.sampled_from(list(Direction)))
def test_view_lies_within_bound(u, direction):
    bounds = make_clocks({'x': 7})
    x = bounds.clocks[0]
    view = hourglass_view(
        ClockValuation({x: u}), DirectionMap({x: direction}), bounds)
    assert 0 <= view[x] <= 7


def test_delay_rule_moves_running_clocks_forward():
    bounds = make_clocks({'x': 2, 'y': 2})
    x, y = bounds.clocks
    rule = DelayRule(bounds.clocks)
    dirs = DirectionMap({x: Direction.MINUS_ONE, y: Direction.ZERO})
    after = rule(ClockValuation.zero(bounds.clocks), dirs, Fraction(5, 2))
    assert after[x] == Fraction(5, 2)
    assert after[y] == 0
    with pytest.raises(PreconditionError):
        rule(after, dirs, -1)


@pytest.mark.parametrize('model, word, flips', [
    ('egg.hga', 'egg15.word', 2),
    ('egg-noflip.hga', 'egg22.word', 1),
    ('egg-bezout.hga', 'egg36.word', 5),
])
def test_translated_runs_accept_sample_schedules(sample, model, word, flips):
    trace = run_translated_word(translate(sample(model)), sample(word))
    assert trace.accepting
    assert trace.flips == flips


def test_translated_run_rejects_early_action(egg):
    trace = run_translated_word(translate(egg), TimedWord(((6, 'flip7'),)))
    assert not trace.accepting
    assert trace.failed_step == 1


def test_translation_lines(egg):
    lines = translation_lines(translate(egg))
    assert lines[0] == 'clocks: x=7, y=11'
    assert any(
        line.startswith('t0.1: ') and 'split x >= cx' in line
        and 'reset {x}' in line for line in lines)
    assert any('update {x} := cx - x' in line for line in lines)


@pytest.mark.parametrize('model', ['egg.hga', 'one-clock.hga'])
def test_translation_bisimulation_on_samples(sample, model):
    report = translation_bisim_check(sample(model), 2, Fraction(1, 2))
    assert report.passed, str(report)
