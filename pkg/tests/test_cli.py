# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Tests for the command line interface.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import argparse
import pytest
from hourglass.main import main, run
from hourglass.run_oracle import resolve_seed

TOGGLING = """
clocks: x=1, y=2
locations: a, b, c
initial: a
final: c
trans a -> b on stop toggle {x}
trans b -> c on go when y == cx & x < cx
"""


@pytest.fixture(autouse=True)
def _workdir(tmp_path, monkeypatch):
    # no hourglass.conf in the working directory
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def path(samples_dir):
    """Path of a bundled sample, as a string."""
    return lambda name: str(samples_dir / name)


def _exit_status(argv):
    with pytest.raises(SystemExit) as info:
        run(argv)
    return info.value.code


@pytest.mark.parametrize('model, word, output', [
    ('egg.hga', 'egg15.word', 'ACCEPT elapsed=15 flips=2'),
    ('egg-noflip.hga', 'egg22.word', 'ACCEPT elapsed=22 flips=1'),
    ('egg-bezout.hga', 'egg36.word', 'ACCEPT elapsed=36 flips=5'),
    ('one-clock.hga', 'one-clock.word', 'ACCEPT elapsed=2 flips=0'),
])
def test_simulate_accepts(capsys, path, model, word, output):
    assert run(['simulate', path(model), '-w', path(word)]) == 0
    assert capsys.readouterr().out.strip() == output


def test_simulate_rejects(capsys, path, tmp_path):
    word = tmp_path / 'early.word'
    word.write_text('delay 6\naction flip7\n')
    assert run(['simulate', path('egg.hga'), '-w', str(word)]) == 3
    captured = capsys.readouterr()
    assert captured.out.strip() == 'REJECT at step 1'
    assert captured.err.startswith('Warning: ')


def test_simulate_trace(capsys, path):
    assert run([
        'simulate', path('one-clock.hga'), '-w', path('one-clock.word'),
        '--trace']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith('idle (x=0)')
    assert lines[-1] == 'ACCEPT elapsed=2 flips=0'


def test_check_writes_replayable_witness(capsys, path, tmp_path):
    witness = tmp_path / 'witness.word'
    assert run([
        'check', path('egg.hga'), '--witness', str(witness), '--stats']) == 0
    captured = capsys.readouterr()
    assert captured.out.strip() == 'NONEMPTY'
    assert 'states=' in captured.err
    assert witness.read_text().startswith('# witness for ')
    assert run(['simulate', path('egg.hga'), '-w', str(witness)]) == 0
    assert capsys.readouterr().out.startswith('ACCEPT')


def test_check_empty_language(capsys, tmp_path):
    model = tmp_path / 'empty.hga'
    model.write_text(
        'clocks: x=1\nlocations: a, b\ninitial: a\nfinal: b\n'
        'trans a -> b on go when x < 0\n')
    witness = tmp_path / 'none.word'
    assert run(['check', str(model), '-w', str(witness)]) == 0
    captured = capsys.readouterr()
    assert captured.out.strip() == 'EMPTY'
    assert 'no witness written' in captured.err
    assert not witness.exists()


def test_check_refuses_three_clocks(capsys, path):
    assert _exit_status(['check', path('egg-noflip.hga')]) == 2
    assert '3 clocks' in capsys.readouterr().err


def test_check_toggles_need_refine(capsys, tmp_path):
    model = tmp_path / 'toggle.hga'
    model.write_text(TOGGLING)
    assert _exit_status(['check', str(model)]) == 2
    assert run(['check', str(model), '--refine']) == 0
    assert capsys.readouterr().out.strip() == 'NONEMPTY'


def test_refine_from_config_file(capsys, tmp_path):
    model = tmp_path / 'toggle.hga'
    model.write_text(TOGGLING)
    (tmp_path / 'hourglass.conf').write_text('refine_half_points = True\n')
    assert run(['check', str(model)]) == 0
    assert capsys.readouterr().out.strip() == 'NONEMPTY'


def test_check_errors(capsys, tmp_path):
    assert _exit_status(['check', str(tmp_path / 'missing.hga')]) == 1
    assert 'Unable to read' in capsys.readouterr().err
    model = tmp_path / 'bad.hga'
    model.write_text('locations: a\ninitial: a\ninvariant a: x <= 3\n')
    assert _exit_status(['check', str(model)]) == 1
    assert 'line 3' in capsys.readouterr().err


def test_translate(capsys, path):
    assert run(['translate', path('egg.hga')]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'clocks: x=7, y=11'
    assert sum(line.startswith('t') for line in lines) == 5


def test_regions_count(capsys, path):
    assert run(['regions', path('one-clock.hga')]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'region-count-bound 24'
    assert lines[1].startswith('graph states=')


def test_regions_enumerate(capsys, path):
    assert run(['regions', path('one-clock.hga'), '--enumerate', '1/4']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == 'regions=6 grid=1/4'
    assert len(lines) == 7
    assert _exit_status(
        ['regions', path('one-clock.hga'), '--enumerate', '0']) == 1


def test_regions_graph_dump(capsys, path):
    assert run(['regions', path('egg.hga'), '--graph']) == 0
    out = capsys.readouterr().out
    assert out.startswith('s0: boiling | ')
    assert 'region-count-bound' not in out


def test_regions_refuses_three_clocks(path):
    assert _exit_status(['regions', path('egg-noflip.hga')]) == 2


def test_oracle_three_clock(capsys):
    assert run(['oracle', '--builtin', 'three-clock']) == 0
    out = capsys.readouterr().out
    assert '0 <= t2 < 1/20' in out
    assert out.strip().splitlines()[-1].startswith('SUITE three-clock PASS')


def test_oracle_small_builtin_suites(capsys):
    assert run(['oracle', '-b', 'lemmas', '--trials', '20', '-s', '4']) == 0
    assert run(['oracle', '-b', 'cross-check', '--trials', '2']) == 0
    assert run(['oracle', '-b', 'bisimulation', '--trials', '1']) == 0
    out = capsys.readouterr().out
    assert 'SUITE lemmas PASS' in out
    assert 'SUITE cross-check-batch PASS' in out
    assert 'SUITE bisimulation-batch PASS' in out


def test_oracle_file(capsys, path):
    assert run(['oracle', path('one-clock.hga'), '--seed', '3']) == 0
    out = capsys.readouterr().out
    assert 'SUITE cross-check PASS' in out
    assert 'SUITE bisimulation PASS' in out


def test_oracle_file_with_three_clocks(path):
    assert _exit_status(['oracle', path('egg-noflip.hga')]) == 1


def test_oracle_usage_errors():
    assert _exit_status(['oracle']) == 2
    assert _exit_status(
        ['oracle', '-b', 'three-clock', '--trials', '0']) == 1


def test_seed_precedence(monkeypatch):
    config = {'args': argparse.Namespace(seed=None), 'seed': 1}
    assert resolve_seed(config) == 1
    monkeypatch.setenv('HGA_SEED', '7')
    assert resolve_seed(config) == 7
    config['args'].seed = 3
    assert resolve_seed(config) == 3
    config['args'].seed = None
    monkeypatch.setenv('HGA_SEED', 'seven')
    with pytest.raises(SystemExit):
        resolve_seed(config)


def test_sampleconfig(capsys, tmp_path, path):
    assert run(['sampleconfig']) == 0
    assert (tmp_path / 'hourglass.conf').exists()
    assert 'Sample config file written' in capsys.readouterr().out
    assert run([
        'simulate', '-c', 'hourglass.conf', path('egg.hga'),
        '-w', path('egg15.word')]) == 0


def test_config_errors(tmp_path, path):
    argv = ['simulate', path('egg.hga'), '-w', path('egg15.word')]
    assert _exit_status(argv[:1] + ['-c', 'nope.conf'] + argv[1:]) == 1
    (tmp_path / 'hourglass.conf').write_text('seed = -5\n')
    assert _exit_status(argv) == 1
    (tmp_path / 'hourglass.conf').write_text('clock_bounds = 2, 2, 2\n')
    assert _exit_status(argv) == 1
    for bounds in ('0, 2', '2, 5'):
        (tmp_path / 'hourglass.conf').write_text(f'clock_bounds = {bounds}\n')
        assert _exit_status(argv) == 1


def test_version_and_help(capsys):
    assert _exit_status(['--version']) == 0
    assert capsys.readouterr().out.startswith('hourglass ')
    assert _exit_status([]) == 0
    assert 'usage: hourglass' in capsys.readouterr().out


def test_main_exits_with_status(path):
    with pytest.raises(SystemExit) as info:
        main(['simulate', path('egg.hga'), '-w', path('egg15.word')])
    assert info.value.code == 0
