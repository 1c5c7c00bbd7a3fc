# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Shared fixtures.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import pathlib
import pytest
from hourglass.sources import read_automaton, read_word

SAMPLES_DIR = pathlib.Path(__file__).resolve().parent.parent / \
    'hourglass' / 'samples'


@pytest.fixture
def samples_dir():
    """Directory of the bundled sample models."""
    return SAMPLES_DIR


@pytest.fixture
def sample():
    """Load a bundled ``.hga`` or ``.word`` file by name."""
    def _load(name):
        path = SAMPLES_DIR / name
        if path.suffix == '.word':
            return read_word(path)
        return read_automaton(path)
    return _load


@pytest.fixture
def egg(sample):
    """The 15-minute egg with a 7- and an 11-minute hourglass."""
    return sample('egg.hga')


@pytest.fixture(autouse=True)
def _no_seed_from_env(monkeypatch):
    monkeypatch.delenv('HGA_SEED', raising=False)
