# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Brute-force oracles for the region construction and the translation.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .report import (  # noqa
    PASS, FAIL, NOTE, PropertyResult, SuiteReport, progress)
from .sampling import (  # noqa
    trial_rng, sample_valuation, random_fraction, random_member,
    guard_atoms, random_automaton)
from .lemma_suite import check_lemma_suite, lemma_reports  # noqa
from .three_clock import three_clock_counterexample  # noqa
from .enumerate_regions import (  # noqa
    enumerate_regions, region_count_report, region_count_suite)
from .cross_check import (  # noqa
    cross_check_emptiness, random_cross_check_batch)
from .bisimulation import (  # noqa
    translation_bisim_check, random_bisim_batch)
