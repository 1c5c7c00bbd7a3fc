# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Oracle reports.

A report is a list of properties, each with a trial count, the number of
failures and the first counterexample. A property marked as a note records
an observation and never fails its suite.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import sys
from dataclasses import dataclass, field

PASS = 'PASS'
FAIL = 'FAIL'
NOTE = 'NOTE'


@dataclass
class PropertyResult:
    """Outcome of one property."""
    name: str
    trials: int = 0
    failures: int = 0
    counterexample: str = ''
    note: bool = False
    details: list = field(default_factory=list)

    @property
    def status(self):
        """PASS, FAIL or NOTE."""
        if self.note:
            return NOTE
        return FAIL if self.failures else PASS

    def record(self, ok, counterexample=None):
        """
        Record one trial.

        :param ok: True if the trial passed
        :param counterexample: text or callable producing it, stored for
            the first failure only
        """
        self.trials += 1
        if ok:
            return
        self.failures += 1
        if not self.counterexample and counterexample is not None:
            if callable(counterexample):
                counterexample = counterexample()
            self.counterexample = str(counterexample)


@dataclass
class SuiteReport:
    """A named list of PropertyResult."""
    name: str
    properties: list = field(default_factory=list)

    def new_property(self, name, note=False):
        """Add and return a new PropertyResult."""
        prop = PropertyResult(name, note=note)
        self.properties.append(prop)
        return prop

    def extend(self, other, prefix=''):
        """Append the properties of another report."""
        for prop in other.properties:
            prop.name = prefix + prop.name
            self.properties.append(prop)

    @property
    def passed(self):
        """True if no property failed."""
        return all(prop.status != FAIL for prop in self.properties)

    @property
    def trials(self):
        """Total number of trials."""
        return sum(prop.trials for prop in self.properties)

    def lines(self):
        """
        Text report, ending with the summary line.

        :returns: list of lines
        """
        lines = [f'== {self.name} ==']
        for prop in self.properties:
            text = f'{prop.name}: {prop.status} trials={prop.trials}'
            if prop.failures:
                text += f' failures={prop.failures}'
            lines.append(text)
            lines.extend(f'  {detail}' for detail in prop.details)
            if prop.counterexample:
                lines.append(f'  counterexample: {prop.counterexample}')
        status = PASS if self.passed else FAIL
        lines.append(f'SUITE {self.name} {status} trials={self.trials}')
        return lines

    def __str__(self):
        return '\n'.join(self.lines())


def progress(message, current, total):
    """
    Print a progress counter on stderr, only when it is a terminal.

    :param message: text before the counter
    :param current: current item (1-based)
    :param total: number of items
    """
    if not sys.stderr.isatty():
        return
    end = '\n' if current == total else ''
    sys.stderr.write(f'\r{message} {current}/{total}{end}')
    sys.stderr.flush()
