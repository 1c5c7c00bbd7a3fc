# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Errors raised by the core model.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""


class ModelError(ValueError):
    """Structural error in an automaton, a guard or a valuation."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""
