# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tests for the ``.hga`` and ``.word`` readers and writers.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from fractions import Fraction
import pytest
from hypothesis import given, settings, strategies as st
from hourglass.model import EXTENDED_MODE, HourglassAutomaton
from hourglass.semantics import TimedWord
from hourglass.sources import (
    ParseError, SourceSpan, ValidationError, parse_automaton, parse_word,
    read_word, serialize_automaton, serialize_word, write_word)

EGG_TEXT = """\
clocks: x=7, y=11
actions: done, flip7
locations: boiling, seven, eleven, cooked
initial: boiling
final: cooked
trans boiling -> seven on flip7 when x == cx flip {x}
trans seven -> eleven on flip7 when y == cx flip {x}
trans eleven -> cooked on done when x == cx
"""


def test_serialize_egg(egg):
    assert serialize_automaton(egg) == EGG_TEXT


@pytest.mark.parametrize('name', [
    'egg.hga', 'egg-noflip.hga', 'egg-bezout.hga', 'one-clock.hga'])
def test_samples_survive_serialization(sample, name):
    automaton = sample(name)
    assert parse_automaton(serialize_automaton(automaton)) == automaton


def test_minimal_automaton():
    automaton = parse_automaton('locations: a\ninitial: a\n')
    assert automaton.clocks == ()
    assert automaton.final == frozenset()
    assert serialize_automaton(automaton) == (
        'clocks:\nactions:\nlocations: a\ninitial: a\nfinal:\n')


def test_actions_default_to_labels():
    automaton = parse_automaton(
        'clocks: x=1\nlocations: a, b\ninitial: a\n'
        'trans a -> b on go\ntrans b -> a on back\n')
    assert automaton.actions == {'go', 'back'}


def test_invariants_and_toggles():
    automaton = parse_automaton(
        'clocks: x=2, y=3  # two glasses\n'
        'locations: a, b\ninitial: a\nfinal: b\n'
        'invariant a: x <= cx & y > 0\n'
        'trans a -> b on go when true toggle {y}\n')
    assert str(automaton.invariant('a')) == 'x <= cx & y > 0'
    assert automaton.transitions[0].toggle == {automaton.clock('y')}
    assert not automaton.transitions[0].guard
    assert 'invariant a: x <= cx & y > 0' in serialize_automaton(automaton)


def test_illegal_constant_in_hourglass_mode():
    text = 'clocks: x=7\nlocations: a\ninitial: a\ninvariant a: x <= 3\n'
    with pytest.raises(ValidationError, match='constant must be 0 or cx') \
            as info:
        parse_automaton(text)
    assert info.value.span == SourceSpan(4, 19, 54)


def test_extended_mode():
    automaton = parse_automaton(
        'mode: extended\nclocks: x=7\nlocations: a\ninitial: a\n'
        'invariant a: x <= 3\n')
    assert automaton.mode == EXTENDED_MODE
    assert serialize_automaton(automaton).startswith('mode: extended\n')
    with pytest.raises(ValidationError, match='exceeds the bound'):
        parse_automaton(
            'mode: extended\nclocks: x=7\nlocations: a\ninitial: a\n'
            'invariant a: x <= 8\n')


@pytest.mark.parametrize('text, message', [
    ('initial: a\n', 'missing section "locations"'),
    ('locations: a\n', 'missing section "initial"'),
    ('locations: a\nlocations: b\ninitial: a\n', 'duplicate section'),
    ('locations: a, a\ninitial: a\n', 'duplicate location "a"'),
    ('locations: a\ninitial: b\n', 'undeclared initial location "b"'),
    ('locations: a\ninitial: a\ntrans a -> zz on go\n',
     'undeclared location "zz"'),
    ('clocks: x=1\nlocations: a\ninitial: a\ntrans a -> a on go flip {y}\n',
     'undeclared clock "y"'),
    ('actions: go\nlocations: a\ninitial: a\ntrans a -> a on stop\n',
     'undeclared action "stop"'),
    ('clocks: cx=1\nlocations: a\ninitial: a\n', 'cannot be a clock name'),
    ('clocks: x=0\nlocations: a\ninitial: a\n', 'at least 1'),
    ('clocks: x=1\nlocations: a\ninitial: a\nfinal: a $\n',
     'unexpected character'),
    ('locations: a\ninitial: a\nwhatever: a\n', 'unknown keyword'),
    ('mode: fancy\nlocations: a\ninitial: a\n', 'unknown mode'),
    ('locations: a\ninitial: a\ntrans a -> a go\n', 'unexpected "go"'),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_automaton(text)


def test_error_span_points_at_token():
    with pytest.raises(ParseError) as info:
        parse_automaton('locations: a\ninitial: a\ntrans a -> b on go\n')
    assert info.value.span.line == 3
    assert info.value.span.column == 12
    assert str(info.value).startswith('line 3, column 12: ')


def test_invalid_utf8():
    with pytest.raises(ParseError, match='invalid UTF-8 at byte 11'):
        parse_automaton(b'locations: \xff\n')


@settings(max_examples=200)
@given(st.binary(max_size=200))
def test_arbitrary_bytes_never_crash(data):
    try:
        automaton = parse_automaton(data)
    except ParseError:
        return
    assert isinstance(automaton, HourglassAutomaton)


@settings(max_examples=200)
@given(st.lists(
    st.sampled_from([
        'clocks:', 'locations:', 'initial:', 'final:', 'actions:',
        'trans', 'invariant', 'when', 'flip', 'toggle', 'on', 'cx', 'true',
        'x', 'y', 'a', 'b', '=', '1', '0', '99999999999999999999999', ',',
        '->', '&', '<=', '==', '{', '}', ':', '\n']),
    max_size=40))
def test_token_soup_never_crashes(tokens):
    try:
        parse_automaton(' '.join(tokens))
    except ParseError:
        pass


def test_parse_word():
    word = parse_word(
        '# comment\ndelay 1/2\ndelay 0.25\naction a\naction b\ndelay 3\n')
    assert word == TimedWord((
        (Fraction(3, 4), 'a'), (0, 'b'), (3, None)))


@pytest.mark.parametrize('text', [
    'delay -1\n', 'delay 1/0\n', 'wait 1\n', 'action\n', 'delay 1 2\n'])
def test_bad_words(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_word_files(tmp_path, sample):
    word = sample('egg15.word')
    assert serialize_word(word) == (
        'delay 7\naction flip7\ndelay 4\naction flip7\ndelay 4\naction done\n')
    path = tmp_path / 'out.word'
    write_word(path, word, comment='witness')
    assert path.read_text().startswith('# witness\n')
    assert read_word(path) == word
