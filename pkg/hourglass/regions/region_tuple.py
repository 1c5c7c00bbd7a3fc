# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Canonical representation of clock regions.

A region is described by five arrays over the clocks, plus optional
half-point marks:

- ``alpha``: the integer interval of each clock;
- ``beta``: rank of each distinguishable clock in the order of fractional
  parts (ties broken by clock index);
- ``gamma``: for consecutive ranks, whether the fractional parts are equal;
- ``zeta``: for each distinguishable clock ``x``, the greatest rank of
  another clock ``y`` with ``fr(x) + fr(y) < 1`` (0 if none);
- ``eta``: the same with ``fr(x) + fr(y) <= 1``;
- ``half``: position of ``fr(x)`` with respect to 1/2.

Clocks above their bound are not distinguishable: they have no rank and
no marks.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import math
from typing import Optional

POINT = 'point'
OPEN = 'open'
OVER = 'over'


class RegionError(Exception):
    """A region operation cannot be carried out."""


class NoTimeFlow(RegionError):
    """Every clock is paused: time cannot change the region."""


class HalfMark(Enum):
    """Position of a fractional part with respect to 1/2."""
    ZERO = '0'
    BELOW = '<'
    HALF = '='
    ABOVE = '>'

    def __str__(self):
        return self.value

    @classmethod
    def of(cls, fraction):
        """Mark of a fractional part in ``[0, 1)``."""
        if fraction == 0:
            return cls.ZERO
        if fraction < Fraction(1, 2):
            return cls.BELOW
        if fraction == Fraction(1, 2):
            return cls.HALF
        return cls.ABOVE

    def mirrored(self):
        """Mark of ``1 - fr`` (flip of a non-integer clock)."""
        return _MIRROR[self]


_MIRROR = {
    HalfMark.ZERO: HalfMark.ZERO,
    HalfMark.BELOW: HalfMark.ABOVE,
    HalfMark.HALF: HalfMark.HALF,
    HalfMark.ABOVE: HalfMark.BELOW,
}


@dataclass(frozen=True, order=True)
class Interval:
    """``[a,a]``, ``(a,a+1)`` or ``(c,inf)``."""
    low: int
    kind: str

    def __str__(self):
        if self.kind == POINT:
            return f'[{self.low},{self.low}]'
        if self.kind == OPEN:
            return f'({self.low},{self.low + 1})'
        return f'({self.low},inf)'

    @classmethod
    def of(cls, value, bound):
        """Interval of ``value`` for a clock bounded by ``bound``."""
        if value > bound:
            return cls(bound, OVER)
        low = math.floor(value)
        return cls(low, POINT if low == value else OPEN)


@dataclass(frozen=True)
class EquivalenceOptions:
    """
    Options of the region equivalence.

    :param refine_half_points: also distinguish ``fr(x)`` below, at and
        above 1/2 (needed when clocks can be paused)
    :param max_clocks: refuse time successors for more clocks than this;
        None disables the check
    """
    refine_half_points: bool = False
    max_clocks: Optional[int] = 2


@dataclass(frozen=True)
class RegionTuple:
    """One region, as per-clock arrays in clock declaration order."""
    clocks: tuple
    alpha: tuple
    beta: tuple
    gamma: tuple
    zeta: tuple
    eta: tuple
    half: Optional[tuple] = None

    def __str__(self):
        fields = [
            f'alpha=({",".join(str(a) for a in self.alpha)})',
            f'beta=({",".join(_opt(b) for b in self.beta)})',
            f'gamma=({",".join("T" if g else "F" for g in self.gamma)})',
            f'zeta=({",".join(_opt(z) for z in self.zeta)})',
            f'eta=({",".join(_opt(e) for e in self.eta)})',
        ]
        if self.half is not None:
            fields.append(f'half=({",".join(_opt(h) for h in self.half)})')
        return ' '.join(fields)

    @property
    def refined(self):
        """True if the region carries half-point marks."""
        return self.half is not None

    def interval(self, clock):
        """Interval of a clock."""
        return self.alpha[self.clocks.index(clock)]

    def is_over(self, clock):
        """True if the clock is above its bound."""
        return self.interval(clock).kind == OVER

    @property
    def distinguishable(self):
        """Clocks within their bound."""
        return frozenset(
            x for x, a in zip(self.clocks, self.alpha) if a.kind != OVER)

    @property
    def untracked(self):
        """Distinguishable clocks whose half mark is not recorded."""
        if self.half is None:
            return frozenset()
        return frozenset(
            x for x, a, h in zip(self.clocks, self.alpha, self.half)
            if a.kind != OVER and h is None)

    def half_mark(self, clock):
        """Half mark of a clock (None if untracked or not refined)."""
        if self.half is None:
            return None
        return self.half[self.clocks.index(clock)]

    def with_half_marks(self, marks):
        """
        Return a copy with some half marks replaced.

        :param marks: mapping clock -> HalfMark or None
        """
        if self.half is None:
            return self
        half = list(self.half)
        for clock, mark in marks.items():
            half[self.clocks.index(clock)] = mark
        return dataclasses.replace(self, half=tuple(half))

    @property
    def combined_band(self):
        """
        True if a half mark and a fractional-sum equality coexist.

        These regions sit where the 1/2 cut meets a ``fr(x) + fr(y) = 1``
        boundary.
        """
        if self.half is None:
            return False
        ranks = {b: x for x, b in zip(self.clocks, self.beta) if b}
        for x, b, z, e in zip(self.clocks, self.beta, self.zeta, self.eta):
            if b is None or z == e:
                continue
            for rank in range(z + 1, e + 1):
                y = ranks.get(rank)
                if y is not None and y != x and (
                        self.half_mark(x) is not None
                        or self.half_mark(y) is not None):
                    return True
        return False


def _opt(value):
    return '-' if value is None else str(value)
