# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Data types for the concrete semantics.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional
from ..model import ClockMap, ClockValuation, DirectionMap


class StepError(Exception):
    """A delay or an action step cannot be taken."""


class DelayBlocked(StepError):
    """The location invariant is violated during a delay."""

    def __init__(self, msg, instant):
        super().__init__(msg)
        self.instant = instant


class GuardFailed(StepError):
    """The guard of a transition does not hold."""


class InvariantFailed(StepError):
    """The invariant of the target location does not hold."""


@dataclass(frozen=True)
class ConcreteState:
    """A location, a clock valuation and a direction map."""
    location: str
    valuation: ClockValuation
    directions: DirectionMap

    def __str__(self):
        dirs = ', '.join(f'{x}={d}' for x, d in self.directions.items())
        return f'{self.location} {self.valuation} d=({dirs})'


class TimedStep(NamedTuple):
    """A delay followed by an action. ``action`` is None for a final delay."""
    delay: Fraction
    action: Optional[str]


@dataclass(frozen=True)
class TimedWord:
    """Sequence of :class:`TimedStep`."""
    steps: tuple = ()

    def __post_init__(self):
        steps = tuple(
            TimedStep(Fraction(delay), action) for delay, action in self.steps)
        for n, step in enumerate(steps):
            if step.delay < 0:
                raise ValueError(f'Negative delay at step {n + 1}')
            if step.action is None and n != len(steps) - 1:
                raise ValueError(f'Missing action at step {n + 1}')
        object.__setattr__(self, 'steps', steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def elapsed(self):
        """Sum of all delays."""
        return sum((step.delay for step in self.steps), Fraction(0))

    @property
    def actions(self):
        """Action labels, in order."""
        return [step.action for step in self.steps if step.action is not None]


@dataclass(frozen=True)
class RunTrace:
    """
    Outcome of running a timed word.

    ``states`` holds the state after each delay and each action, starting
    with the initial state. ``failed_step`` is the 1-based index of the step
    at which the run was rejected (0 if there is no initial state), or None
    for accepting runs. ``flip_counts`` maps each clock to the number of
    times it was flipped, when the runner tracks it.
    """
    word: TimedWord
    states: tuple
    accepting: bool
    elapsed: Fraction
    flips: int
    failed_step: Optional[int] = None
    reason: str = ''
    flip_counts: Optional[ClockMap] = None
