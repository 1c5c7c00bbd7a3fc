# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Translate hourglass automata into timed automata over forward clocks.

A translated clock measures the sand fallen in its current orientation.
Flipping a clock that is below its bound maps ``u`` to ``c_x - u``; at or
above the bound the glass is empty on the other side, so the clock is reset.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from itertools import combinations
from ..model import (
    CX, ExtendedTimedAutomaton, Guard, GuardAtom, TranslatedTransition)


def _subsets(clocks):
    clocks = sorted(clocks)
    for size in range(len(clocks) + 1):
        for subset in combinations(clocks, size):
            yield frozenset(subset)


def translate_transition(transition, origin):
    """
    Split an hourglass transition into its guarded variants.

    :param transition: Transition
    :param origin: index of the transition in its automaton
    :returns: list of TranslatedTransition, one per subset of flipped clocks
        found at or over their bound
    """
    variants = []
    for at_bound in _subsets(transition.flip):
        below = transition.flip - at_bound
        split = Guard(
            tuple(GuardAtom(x, '>=', CX) for x in sorted(at_bound))
            + tuple(GuardAtom(x, '<', CX) for x in sorted(below)))
        variants.append(TranslatedTransition(
            source=transition.source,
            action=transition.action,
            target=transition.target,
            guard=transition.guard,
            split=split,
            resets=at_bound,
            flip_updates=below,
            flipped=transition.flip,
            toggled=transition.toggle,
            origin=origin))
    return variants


def translate(automaton):
    """
    Translate an hourglass automaton.

    Locations, actions, initial and final locations, invariants and guards
    are kept as they are. Each transition flipping ``k`` clocks becomes
    ``2**k`` variants.

    :param automaton: HourglassAutomaton
    :returns: ExtendedTimedAutomaton
    """
    transitions = []
    for origin, tr in enumerate(automaton.transitions):
        transitions += translate_transition(tr, origin)
    return ExtendedTimedAutomaton(
        actions=automaton.actions,
        locations=automaton.locations,
        initial=automaton.initial,
        final=automaton.final,
        bounds=automaton.bounds,
        invariants=automaton.invariants,
        transitions=tuple(transitions),
        mode=automaton.mode)
