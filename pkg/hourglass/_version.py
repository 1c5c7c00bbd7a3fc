# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Version information for hourglass.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
__version__ = '0.1.0'


def get_versions():
    """Version information, in the form used by the command line."""
    return {'version': __version__}
