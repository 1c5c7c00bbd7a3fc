# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Language emptiness of hourglass automata.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import time
from dataclasses import dataclass, field
from typing import Optional
from ..semantics import TimedWord
from ..translation import translate
from .region_graph import GraphOptions, RegionGraph, build_region_graph
from .witness import extract_timed_witness

EMPTY = 'EMPTY'
NONEMPTY = 'NONEMPTY'


@dataclass(frozen=True)
class EmptinessResult:
    """
    Verdict of an emptiness check.

    ``witness_path`` is a shortest path (in edges) from an initial to a
    final region state, ``witness`` its realization as a timed word.
    """
    verdict: str
    graph: RegionGraph
    witness_path: Optional[tuple] = None
    witness: Optional[TimedWord] = None
    stats: dict = field(default_factory=dict)

    @property
    def nonempty(self):
        """True if some timed word is accepted."""
        return self.verdict == NONEMPTY

    @property
    def warnings(self):
        """Warnings collected while building the graph."""
        return list(self.graph.warnings)


def check_emptiness(automaton, options=GraphOptions()):
    """
    Decide language emptiness.

    :param automaton: HourglassAutomaton
    :param options: GraphOptions
    :returns: EmptinessResult; NONEMPTY results carry a witness that
        replays to acceptance
    :raises RefusedError: if the region graph cannot be built
    :raises SoundnessError: if the witness does not replay
    """
    start = time.perf_counter()
    graph = build_region_graph(translate(automaton), options)
    # states are in breadth-first order: the first final one is closest
    final = graph.finals[0] if graph.finals else None
    path = witness = None
    if final is not None:
        path = graph.path_to(final)
        witness = extract_timed_witness(graph, path, automaton)
    stats = {
        'states': len(graph),
        'edges': graph.num_edges,
        'seconds': time.perf_counter() - start,
    }
    return EmptinessResult(
        NONEMPTY if final is not None else EMPTY,
        graph, path, witness, stats)
