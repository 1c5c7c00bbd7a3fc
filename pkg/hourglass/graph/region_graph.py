# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Region graph of a translated automaton.

States are ``(location, region, directions)``. A delay edge leads to the
time successor of the region, an action edge takes one guarded variant of
a transition. Only the fragment reachable from the initial states is
built, in breadth-first order.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional
from ..model import ClockValuation, DirectionMap
from ..regions import (
    EquivalenceOptions, NoTimeFlow, RegionError, RegionTuple,
    region_apply_flip, region_apply_reset, region_count_bound,
    region_forget_half, region_half_splits, region_of, region_satisfies,
    time_successor, untracked_clocks)

DELAY = 'delay'
ACTION = 'action'


class RefusedError(Exception):
    """The region graph cannot decide emptiness for this automaton."""


class RefusedUnsound(RefusedError):
    """More than two clocks, and unsound mode not requested."""


class RefusedUnrefined(RefusedError):
    """Paused clocks need the half-point refinement."""


@dataclass(frozen=True)
class GraphOptions:
    """
    Options for building region graphs.

    :param refine_half_points: track half-point marks (required when
        transitions toggle clocks)
    :param unsound: build graphs for more than two clocks anyway
    """
    refine_half_points: bool = False
    unsound: bool = False

    @property
    def equivalence(self):
        """EquivalenceOptions for the regions of the graph."""
        return EquivalenceOptions(
            refine_half_points=self.refine_half_points,
            max_clocks=None if self.unsound else 2)


@dataclass(frozen=True)
class RegionState:
    """Location, region and direction map."""
    location: str
    region: RegionTuple
    directions: DirectionMap

    def __str__(self):
        dirs = ','.join(str(d) for d in self.directions.values())
        return f'{self.location} | {self.region} | d=({dirs})'


class Edge(NamedTuple):
    """
    An edge of the region graph.

    ``transition`` is the index of the hourglass transition and ``variant``
    the index of the translated variant; both are None for delay edges.
    """
    kind: str
    target: RegionState
    label: Optional[str] = None
    transition: Optional[int] = None
    variant: Optional[int] = None

    def __str__(self):
        if self.kind == DELAY:
            return f'delay -> {self.target}'
        return (
            f'{self.label} (t{self.transition}/v{self.variant}) '
            f'-> {self.target}')


class PathStep(NamedTuple):
    """A state of a path and the edge that reached it (None at the start)."""
    state: RegionState
    edge: Optional[Edge]


@dataclass
class RegionGraph:
    """Reachable region graph, states in breadth-first discovery order."""
    automaton: object
    options: GraphOptions
    states: list = field(default_factory=list)
    delay_edges: dict = field(default_factory=dict)
    action_edges: dict = field(default_factory=dict)
    initials: list = field(default_factory=list)
    finals: list = field(default_factory=list)
    parents: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def __contains__(self, state):
        return state in self.parents

    def __len__(self):
        return len(self.states)

    def add_state(self, state, parent=None):
        """Record a newly discovered state."""
        self.parents[state] = parent
        self.states.append(state)
        self.action_edges[state] = []
        if state.location in self.automaton.final:
            self.finals.append(state)

    def edges(self, state):
        """Outgoing edges of a state, the delay edge first."""
        edges = []
        if state in self.delay_edges:
            edges.append(self.delay_edges[state])
        return edges + self.action_edges[state]

    @property
    def num_edges(self):
        """Total number of edges."""
        return len(self.delay_edges) + sum(
            len(edges) for edges in self.action_edges.values())

    @property
    def state_bound(self):
        """``|S| * region_count_bound * 4**|X|``."""
        clocks = self.automaton.clocks
        if not clocks:
            return len(self.automaton.locations)
        return (
            len(self.automaton.locations)
            * region_count_bound(self.automaton.bounds) * 4 ** len(clocks))

    def path_to(self, state):
        """
        Breadth-first path from an initial state.

        :param state: RegionState in the graph
        :returns: tuple of PathStep, starting at an initial state
        """
        steps = []
        while state is not None:
            parent = self.parents[state]
            if parent is None:
                steps.append(PathStep(state, None))
                break
            previous, edge = parent
            steps.append(PathStep(state, edge))
            state = previous
        return tuple(reversed(steps))

    def dump(self):
        """
        Text dump: one state per line, edges as indented lines.

        Regions where a half mark meets a sum equality are flagged with *.

        :returns: list of lines
        """
        index = {state: n for n, state in enumerate(self.states)}
        lines = []
        for n, state in enumerate(self.states):
            flags = ''
            if state in self.initials:
                flags += ' initial'
            if state.location in self.automaton.final:
                flags += ' final'
            if state.region.combined_band:
                flags += ' *'
            lines.append(f's{n}: {state}{flags}')
            for edge in self.edges(state):
                if edge.kind == DELAY:
                    lines.append(f'    delay -> s{index[edge.target]}')
                else:
                    lines.append(
                        f'    {edge.label} [t{edge.transition}] '
                        f'-> s{index[edge.target]}')
        return lines


def _check_supported(automaton, options):
    if len(automaton.clocks) > 2 and not options.unsound:
        raise RefusedUnsound(
            f'{len(automaton.clocks)} clocks: emptiness is only decided for '
            'two clocks or fewer (use unsound mode to build the graph anyway)')
    if automaton.has_toggles and not options.refine_half_points:
        raise RefusedUnrefined(
            'Transitions toggle clocks: the half-point refinement is required')


def _initial_states(automaton, opts):
    bounds = automaton.bounds
    zero = ClockValuation.zero(automaton.clocks)
    directions = DirectionMap.initial(automaton.clocks)
    region = region_of(
        zero, bounds, opts, untracked_clocks(directions, opts))
    states = []
    for loc in automaton.initial:
        if region_satisfies(
                region, automaton.invariant(loc), bounds, directions):
            states.append(RegionState(loc, region, directions))
    return states


def _delay_edge(automaton, state, opts):
    bounds = automaton.bounds
    try:
        region = time_successor(
            state.region, state.directions, bounds, opts)
    except NoTimeFlow:
        return None
    if region == state.region:
        return None
    invariant = automaton.invariant(state.location)
    if not region_satisfies(region, invariant, bounds, state.directions):
        return None
    return Edge(DELAY, RegionState(state.location, region, state.directions))


def action_targets(automaton, state, variant, opts):
    """
    Targets of a translated variant taken from a region state.

    :param automaton: ExtendedTimedAutomaton
    :param state: RegionState
    :param variant: TranslatedTransition leaving ``state.location``
    :param opts: EquivalenceOptions
    :returns: list of RegionState (several when pausing a clock splits its
        half mark)
    """
    bounds = automaton.bounds
    region, directions = state.region, state.directions
    if not region_satisfies(region, variant.guard, bounds, directions):
        return []
    if not region_satisfies(region, variant.split, bounds):
        return []
    region = region_apply_reset(region, variant.resets, bounds, opts)
    region = region_apply_flip(region, variant.flip_updates, bounds, opts)
    directions = variant.direction_delta(directions)
    untracked = untracked_clocks(directions, opts)
    region = region_forget_half(region, untracked)
    invariant = automaton.invariant(variant.target)
    return [
        RegionState(variant.target, split, directions)
        for split in region_half_splits(
            region, region.untracked - untracked, bounds)
        if region_satisfies(split, invariant, bounds, directions)
    ]


def _successors(automaton, state, opts):
    edges = []
    delay = _delay_edge(automaton, state, opts)
    if delay is not None:
        edges.append(delay)
    for index, variant in automaton.outgoing(state.location):
        for target in action_targets(automaton, state, variant, opts):
            edges.append(Edge(
                ACTION, target, variant.action, variant.origin, index))
    return edges


def build_region_graph(automaton, options=GraphOptions()):
    """
    Build the reachable region graph of a translated automaton.

    :param automaton: ExtendedTimedAutomaton
    :param options: GraphOptions
    :returns: RegionGraph
    :raises RefusedUnsound: more than two clocks without unsound mode
    :raises RefusedUnrefined: toggles without the half-point refinement
    """
    _check_supported(automaton, options)
    opts = options.equivalence
    graph = RegionGraph(automaton, options)
    if len(automaton.clocks) > 2:
        graph.warnings.append(
            f'{len(automaton.clocks)} clocks: the region graph is not '
            'guaranteed to be sound')
    queue = deque()
    for state in _initial_states(automaton, opts):
        if state not in graph:
            graph.add_state(state)
            graph.initials.append(state)
            queue.append(state)
    while queue:
        state = queue.popleft()
        try:
            edges = _successors(automaton, state, opts)
        except RegionError as e:
            if not options.unsound:
                raise
            graph.warnings.append(f'state {state} not expanded: {e}')
            continue
        for edge in edges:
            if edge.kind == DELAY:
                graph.delay_edges[state] = edge
            else:
                graph.action_edges[state].append(edge)
            if edge.target not in graph:
                graph.add_state(edge.target, (state, edge))
                queue.append(edge.target)
    return graph
