# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Translation of hourglass automata into extended timed automata.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .translate import translate, translate_transition  # noqa
from .translated_semantics import (  # noqa
    hourglass_view, DelayRule, concretize_direction_semantics,
    translated_initial_states, translated_delay, variant_enabled,
    apply_variant_updates, translated_action_step, translated_successors,
    run_translated_word)
