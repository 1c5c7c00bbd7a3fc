# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Data types for hourglass automata.

All time values are exact rationals (:class:`fractions.Fraction`).
Every object defined here is immutable once constructed.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import operator
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from .errors import ModelError

# Symbolic guard constant: the bound of the clock the atom refers to
CX = 'cx'

HOURGLASS_MODE = 'hourglass'
EXTENDED_MODE = 'extended'

RELATIONS = {
    '<': operator.lt,
    '<=': operator.le,
    '==': operator.eq,
    '>=': operator.ge,
    '>': operator.gt,
}


@dataclass(frozen=True, order=True)
class ClockId:
    """
    A clock, ordered by its declaration index.

    Clocks of different automata with the same index are different clocks
    unless their names agree.
    """
    index: int
    name: str

    def __str__(self):
        return self.name


class Direction(Enum):
    """
    Run direction of an hourglass clock.

    ``ZERO`` and ``MINUS_ZERO`` are paused clocks; the sign is the direction
    the clock takes when it is resumed.
    """
    MINUS_ONE = '-1'
    MINUS_ZERO = '-0'
    ZERO = '0'
    PLUS_ONE = '+1'

    def __str__(self):
        return self.value

    @property
    def running(self):
        """True if the clock is not paused."""
        return self in (Direction.PLUS_ONE, Direction.MINUS_ONE)

    @property
    def negative(self):
        """True if the clock runs (or will run) towards zero."""
        return self in (Direction.MINUS_ONE, Direction.MINUS_ZERO)

    def flipped(self):
        """Return the direction after a flip."""
        return _FLIP[self]

    def toggled(self):
        """Return the direction after a toggle."""
        return _TOGGLE[self]


_FLIP = {
    Direction.PLUS_ONE: Direction.MINUS_ONE,
    Direction.MINUS_ONE: Direction.PLUS_ONE,
    Direction.ZERO: Direction.MINUS_ZERO,
    Direction.MINUS_ZERO: Direction.ZERO,
}
_TOGGLE = {
    Direction.PLUS_ONE: Direction.ZERO,
    Direction.ZERO: Direction.PLUS_ONE,
    Direction.MINUS_ONE: Direction.MINUS_ZERO,
    Direction.MINUS_ZERO: Direction.MINUS_ONE,
}


class ClockMap(Mapping):
    """
    Immutable, hashable mapping from :class:`ClockId` to a value.

    Iteration follows the clock declaration order.
    """

    def __init__(self, items=()):
        if isinstance(items, Mapping):
            items = items.items()
        self._items = dict(sorted(
            ((self._check_key(k), self._convert(v)) for k, v in items),
            key=operator.itemgetter(0)))
        self._hash = None

    @staticmethod
    def _check_key(key):
        if not isinstance(key, ClockId):
            raise ModelError(f'Not a clock: {key!r}')
        return key

    def _convert(self, value):
        return value

    def __getitem__(self, clock):
        try:
            return self._items[clock]
        except KeyError as e:
            raise ModelError(f'Unknown clock: {clock}') from e

    def __contains__(self, clock):
        return clock in self._items

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._items.items()))
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, ClockMap):
            return NotImplemented
        return type(self) is type(other) and self._items == other._items

    def __repr__(self):
        return f'{type(self).__name__}({self})'

    def __str__(self):
        inner = ', '.join(f'{k}={v}' for k, v in self._items.items())
        return f'({inner})'

    @property
    def clocks(self):
        """Clocks in declaration order."""
        return tuple(self._items)

    def updated(self, changes):
        """
        Return a copy with some entries replaced.

        :param changes: mapping of clock to new value
        :returns: new map of the same type
        """
        items = dict(self._items)
        for clock, value in changes.items():
            if clock not in items:
                raise ModelError(f'Unknown clock: {clock}')
            items[clock] = value
        return type(self)(items)


class ClockBounds(ClockMap):
    """Per-clock maximum constant ``c_x``, a positive integer."""

    def _convert(self, value):
        if isinstance(value, bool) or int(value) != value or value < 1:
            raise ModelError(f'Clock bound must be an integer >= 1: {value}')
        return int(value)

    @property
    def max_bound(self):
        """Largest bound over all clocks."""
        return max(self._items.values(), default=0)


class ClockValuation(ClockMap):
    """Mapping from clock to an exact non-negative rational value."""

    def _convert(self, value):
        value = Fraction(value)
        if value < 0:
            raise ModelError(f'Clock values must be non-negative: {value}')
        return value

    @classmethod
    def zero(cls, clocks):
        """Return the valuation with every clock at zero."""
        return cls({clock: 0 for clock in clocks})

    def delayed(self, delay, clocks=None):
        """
        Advance clocks forward by ``delay``, without saturation.

        :param delay: non-negative rational
        :param clocks: clocks to advance (default: all)
        :returns: new valuation
        """
        delay = Fraction(delay)
        if clocks is None:
            clocks = self.clocks
        return self.updated({x: self[x] + delay for x in clocks})


class DirectionMap(ClockMap):
    """Mapping from clock to its :class:`Direction`."""

    def _convert(self, value):
        if not isinstance(value, Direction):
            raise ModelError(f'Not a direction: {value!r}')
        return value

    @classmethod
    def initial(cls, clocks):
        """All clocks running forward."""
        return cls({clock: Direction.PLUS_ONE for clock in clocks})

    def running_clocks(self):
        """Return the set of clocks that are not paused."""
        return frozenset(x for x, d in self._items.items() if d.running)

    def flip(self, clocks):
        """Return the map with ``clocks`` flipped."""
        return self.updated({x: self[x].flipped() for x in clocks})

    def toggle(self, clocks):
        """Return the map with ``clocks`` toggled."""
        return self.updated({x: self[x].toggled() for x in clocks})

    def after_transition(self, flip_set, toggle_set):
        """Flip first, then toggle."""
        return self.flip(flip_set).toggle(toggle_set)


@dataclass(frozen=True)
class GuardAtom:
    """
    Comparison of a clock against a constant.

    The constant is either an integer or :data:`CX`, which resolves to the
    clock's own bound.
    """
    clock: ClockId
    relation: str
    constant: object

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ModelError(f'Unknown relation: {self.relation}')
        if self.constant != CX and (
                isinstance(self.constant, bool)
                or not isinstance(self.constant, int)
                or self.constant < 0):
            raise ModelError(
                f'Guard constant must be a natural number or {CX}: '
                f'{self.constant!r}')

    def __str__(self):
        return f'{self.clock} {self.relation} {self.constant}'

    def resolve(self, bounds):
        """Return the integer constant for ``bounds``."""
        if self.constant == CX:
            return bounds[self.clock]
        return self.constant

    def holds(self, value, bounds):
        """
        Evaluate the atom on a clock value.

        :param value: rational value of the clock
        :param bounds: clock bounds, used to resolve ``cx``
        :returns: True if the comparison holds
        """
        return RELATIONS[self.relation](value, self.resolve(bounds))


@dataclass(frozen=True)
class Guard:
    """Conjunction of :class:`GuardAtom`. The empty guard is true."""
    atoms: tuple = ()

    def __str__(self):
        if not self.atoms:
            return 'true'
        return ' & '.join(str(atom) for atom in self.atoms)

    def __bool__(self):
        return bool(self.atoms)

    def __and__(self, other):
        return Guard(self.atoms + other.atoms)

    @property
    def clocks(self):
        """Clocks mentioned by the guard."""
        return frozenset(atom.clock for atom in self.atoms)

    @property
    def constants(self):
        """Constants mentioned by the guard."""
        return frozenset(atom.constant for atom in self.atoms)


TRUE = Guard()


@dataclass(frozen=True)
class Transition:
    """Hourglass transition ``<source, action, guard, flip, toggle, target>``."""
    source: str
    action: str
    target: str
    guard: Guard = TRUE
    flip: frozenset = frozenset()
    toggle: frozenset = frozenset()

    def __str__(self):
        text = f'{self.source} -> {self.target} on {self.action}'
        if self.guard:
            text += f' when {self.guard}'
        if self.flip:
            text += f' flip {_clock_set_str(self.flip)}'
        if self.toggle:
            text += f' toggle {_clock_set_str(self.toggle)}'
        return text


def _clock_set_str(clocks):
    return '{' + ', '.join(str(x) for x in sorted(clocks)) + '}'


@dataclass(frozen=True, eq=True)
class HourglassAutomaton:
    """
    The 7-tuple ``(actions, locations, initial, final, clocks, invariants,
    transitions)``.

    ``mode`` is ``'hourglass'`` (guards compare against 0 and ``cx`` only)
    or ``'extended'`` (any integer constant up to the clock bound).
    """
    actions: frozenset
    locations: tuple
    initial: tuple
    final: frozenset
    bounds: ClockBounds
    invariants: tuple = ()
    transitions: tuple = ()
    mode: str = HOURGLASS_MODE

    def __post_init__(self):
        validate_automaton(self)

    @property
    def clocks(self):
        """Clocks in declaration order."""
        return self.bounds.clocks

    def clock(self, name):
        """
        Look up a clock by name.

        :param name: clock name
        :returns: ClockId
        :raises ModelError: if no clock has that name
        """
        for clock in self.clocks:
            if clock.name == name:
                return clock
        raise ModelError(f'Unknown clock: {name}')

    def invariant(self, location):
        """Invariant of a location (true when none is declared)."""
        return dict(self.invariants).get(location, TRUE)

    def outgoing(self, location, action=None):
        """
        Transitions leaving ``location``, in declaration order.

        :param location: source location
        :param action: if given, only transitions with this label
        :returns: list of (transition index, transition)
        """
        return [
            (n, tr) for n, tr in enumerate(self.transitions)
            if tr.source == location and (action is None or tr.action == action)
        ]

    @property
    def has_toggles(self):
        """True if any transition toggles a clock."""
        return any(tr.toggle for tr in self.transitions)


def check_guard(guard, bounds, mode=HOURGLASS_MODE, what='guard'):
    """
    Check that a guard is legal for the given clocks and mode.

    :param guard: Guard to check
    :param bounds: clock bounds
    :param mode: automaton mode
    :param what: description used in error messages
    :raises ModelError: if the guard is not legal
    """
    for atom in guard.atoms:
        if atom.clock not in bounds:
            raise ModelError(f'Unknown clock in {what}: {atom.clock}')
        if atom.constant == CX:
            continue
        if mode == HOURGLASS_MODE and atom.constant != 0:
            raise ModelError(
                f'Invalid constant in {what} "{atom}": '
                'constant must be 0 or cx')
        if atom.constant > bounds[atom.clock]:
            raise ModelError(
                f'Invalid constant in {what} "{atom}": '
                f'constant exceeds the bound of {atom.clock}')


def validate_automaton(automaton):
    """
    Structural validation of an hourglass automaton.

    :param automaton: HourglassAutomaton
    :raises ModelError: on the first problem found
    """
    if automaton.mode not in (HOURGLASS_MODE, EXTENDED_MODE):
        raise ModelError(f'Unknown mode: {automaton.mode}')
    if not isinstance(automaton.bounds, ClockBounds):
        raise ModelError('Clock bounds must be a ClockBounds object')
    names = [x.name for x in automaton.clocks]
    if len(set(names)) != len(names):
        raise ModelError('Clock names must be unique')
    if [x.index for x in automaton.clocks] != list(range(len(names))):
        raise ModelError('Clock indices must be 0..n-1')
    locations = set(automaton.locations)
    if len(locations) != len(automaton.locations):
        raise ModelError('Location names must be unique')
    for loc in automaton.initial:
        if loc not in locations:
            raise ModelError(f'Undeclared initial location: {loc}')
    for loc in automaton.final:
        if loc not in locations:
            raise ModelError(f'Undeclared final location: {loc}')
    for loc, guard in automaton.invariants:
        if loc not in locations:
            raise ModelError(f'Invariant for undeclared location: {loc}')
        check_guard(guard, automaton.bounds, automaton.mode, 'invariant')
    for tr in automaton.transitions:
        for loc in (tr.source, tr.target):
            if loc not in locations:
                raise ModelError(f'Undeclared location in transition: {loc}')
        if tr.action not in automaton.actions:
            raise ModelError(f'Undeclared action: {tr.action}')
        check_guard(tr.guard, automaton.bounds, automaton.mode)
        for clock in tr.flip | tr.toggle:
            if clock not in automaton.bounds:
                raise ModelError(f'Unknown clock in transition: {clock}')


@dataclass(frozen=True)
class TranslatedTransition:
    """
    One guarded variant of an hourglass transition over forward clocks.

    ``guard`` is the original hourglass guard, read on the direction-resolved
    view of the clocks. ``split`` holds the at/over-bound atoms selecting the
    variant, read on the raw forward values. ``resets`` are set to zero,
    ``flip_updates`` get ``x := c_x - x``; ``flipped`` and ``toggled`` give the
    direction delta.
    """
    source: str
    action: str
    target: str
    guard: Guard
    split: Guard
    resets: frozenset
    flip_updates: frozenset
    flipped: frozenset
    toggled: frozenset
    origin: int

    def __str__(self):
        text = f'{self.source} -> {self.target} on {self.action}'
        if self.guard:
            text += f' when {self.guard}'
        if self.split:
            text += f' split {self.split}'
        if self.resets:
            text += f' reset {_clock_set_str(self.resets)}'
        if self.flip_updates:
            text += f' update {_clock_set_str(self.flip_updates)} := cx - x'
        if self.flipped:
            text += f' negate {_clock_set_str(self.flipped)}'
        if self.toggled:
            text += f' toggle {_clock_set_str(self.toggled)}'
        return text

    def direction_delta(self, directions):
        """Apply the direction delta to a DirectionMap."""
        return directions.after_transition(self.flipped, self.toggled)


@dataclass(frozen=True)
class ExtendedTimedAutomaton:
    """
    Timed automaton over forward-running clocks, extended with the
    ``x := c_x - x`` update and a direction delta on every transition.
    """
    actions: frozenset
    locations: tuple
    initial: tuple
    final: frozenset
    bounds: ClockBounds
    invariants: tuple
    transitions: tuple
    mode: str = HOURGLASS_MODE

    @property
    def clocks(self):
        """Clocks in declaration order."""
        return self.bounds.clocks

    def invariant(self, location):
        """Invariant of a location (true when none is declared)."""
        return dict(self.invariants).get(location, TRUE)

    def outgoing(self, location, action=None):
        """Variants leaving ``location``, as (variant index, variant)."""
        return [
            (n, tr) for n, tr in enumerate(self.transitions)
            if tr.source == location and (action is None or tr.action == action)
        ]

    @property
    def has_toggles(self):
        """True if any variant toggles a clock."""
        return any(tr.toggled for tr in self.transitions)


def make_clocks(bounds):
    """
    Build a :class:`ClockBounds` from ``(name, bound)`` pairs.

    :param bounds: iterable of (name, bound) or a dict name -> bound
    :returns: ClockBounds, clocks indexed in the given order
    """
    if isinstance(bounds, Mapping):
        bounds = bounds.items()
    return ClockBounds({
        ClockId(index, name): bound
        for index, (name, bound) in enumerate(bounds)
    })
