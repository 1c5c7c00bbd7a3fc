# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tests for region graphs, emptiness and witnesses.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import pytest
from hourglass.graph import (
    ACTION, DELAY, EMPTY, NONEMPTY, GraphOptions, RefusedUnrefined,
    RefusedUnsound, SoundnessError, build_region_graph, check_emptiness,
    extract_timed_witness)
from hourglass.semantics import run_word
from hourglass.sources import parse_automaton
from hourglass.translation import translate

CHAIN = """
clocks: x=2
locations: idle, done
initial: idle
final: done
trans idle -> done on go when x >= cx
"""

UNREACHABLE = """
clocks: x=1, y=1
locations: a, b
initial: a
final: b
trans a -> b on go when x < 0
"""

TOGGLING = """
clocks: x=1, y=2
locations: a, b, c
initial: a
final: c
trans a -> b on stop toggle {x}
trans b -> c on go when y == cx & x < cx
"""

THREE_CLOCKS = """
clocks: x=1, y=1, z=1
locations: a, b
initial: a
final: b
trans a -> b on go when z == cx
"""


def _delay_chain(graph, state):
    chain = [state]
    while state in graph.delay_edges:
        state = graph.delay_edges[state].target
        chain.append(state)
    return chain


def test_one_clock_delay_chain():
    graph = build_region_graph(translate(parse_automaton(CHAIN)))
    start = graph.initials[0]
    chain = _delay_chain(graph, start)
    assert [str(s.region.alpha[0]) for s in chain] == [
        '[0,0]', '(0,1)', '[1,1]', '(1,2)', '[2,2]', '(2,inf)']
    enabled = [
        s for s in chain
        if any(e.kind == ACTION for e in graph.edges(s))]
    assert [str(s.region.alpha[0]) for s in enabled] == ['[2,2]', '(2,inf)']
    edge = graph.edges(chain[4])[-1]
    assert edge.label == 'go'
    assert edge.target.location == 'done'


def test_egg_is_nonempty_with_replaying_witness(egg):
    result = check_emptiness(egg)
    assert result.verdict == NONEMPTY
    assert result.nonempty
    assert run_word(egg, result.witness).accepting
    path = result.witness_path
    assert path[0].edge is None
    assert path[-1].state.location == 'cooked'
    assert result.witness.actions[-1] == 'done'
    assert result.stats['states'] == len(result.graph)


def test_unrealizable_witness_path_raises(egg):
    result = check_emptiness(egg)
    # without its delay steps the first flip happens at time 0
    path = tuple(
        step for step in result.witness_path
        if step.edge is None or step.edge.kind != DELAY)
    with pytest.raises(SoundnessError, match='no concrete realization'):
        extract_timed_witness(result.graph, path, egg)


def test_one_clock_sample(sample):
    result = check_emptiness(sample('one-clock.hga'))
    assert result.nonempty
    assert result.witness.actions == ['go']
    assert result.witness.elapsed == 2


def test_unsatisfiable_guard_is_empty():
    result = check_emptiness(parse_automaton(UNREACHABLE))
    assert result.verdict == EMPTY
    assert result.witness is None
    assert result.witness_path is None


def test_initial_final_location():
    automaton = parse_automaton(
        'clocks: x=1\nlocations: a\ninitial: a\nfinal: a\n')
    result = check_emptiness(automaton)
    assert result.nonempty
    assert len(result.witness) == 0


def test_three_clocks_are_refused(sample):
    with pytest.raises(RefusedUnsound):
        check_emptiness(sample('egg-noflip.hga'))


def test_toggles_need_refinement():
    automaton = parse_automaton(TOGGLING)
    with pytest.raises(RefusedUnrefined):
        check_emptiness(automaton)
    result = check_emptiness(
        automaton, GraphOptions(refine_half_points=True))
    assert result.nonempty
    assert run_word(automaton, result.witness).accepting


def test_unsound_mode_builds_three_clock_graphs():
    automaton = parse_automaton(THREE_CLOCKS)
    result = check_emptiness(automaton, GraphOptions(unsound=True))
    assert result.nonempty
    assert any('3 clocks' in w for w in result.warnings)
    assert run_word(automaton, result.witness).accepting


def test_graph_size_and_dump(egg):
    graph = build_region_graph(translate(egg))
    assert 0 < len(graph) <= graph.state_bound
    assert graph.num_edges >= len(graph) - 1
    lines = graph.dump()
    assert lines[0].startswith('s0: boiling | ')
    assert lines[0].endswith('initial')
    assert any(line.strip().startswith('delay -> s') for line in lines)
    assert any('flip7 [t0]' in line for line in lines)


def test_delay_edges_stay_in_location(egg):
    graph = build_region_graph(translate(egg))
    for state, edge in graph.delay_edges.items():
        assert edge.kind == DELAY
        assert edge.target.location == state.location
        assert edge.target.directions == state.directions
