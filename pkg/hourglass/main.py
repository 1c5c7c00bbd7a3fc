#!/usr/bin/env python
# PYTHON_ARGCOMPLETE_OK
# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Main script for hourglass.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import sys
import contextlib
# NOTE: other modules are lazy-imported to speed up startup time
# pylint: disable=import-outside-toplevel, relative-beyond-top-level


def run(argv=None):
    """
    Run hourglass.

    :param argv: command line arguments (default: ``sys.argv[1:]``)
    :returns: exit status
    """
    from .parse_arguments import parse_arguments
    args = parse_arguments(argv)
    from .config import (
        DEFAULT_CONFIG_FILE, parse_configspec, load_config,
        write_sample_config)
    configspec = parse_configspec()
    if args.action == 'sampleconfig':
        write_sample_config(configspec, 'hourglass')
        return 0
    config = load_config(
        args.configfile or DEFAULT_CONFIG_FILE,
        args.configfile is not None, configspec)
    config['args'] = args
    if args.action == 'check':
        from .check import check
        return check(config)
    if args.action == 'simulate':
        from .simulate import simulate
        return simulate(config)
    if args.action == 'translate':
        from .print_translation import print_translation
        return print_translation(config)
    if args.action == 'regions':
        from .print_regions import print_regions
        return print_regions(config)
    if args.action == 'oracle':
        from .run_oracle import run_oracle
        return run_oracle(config)
    return 0


def main(argv=None):
    """Main function. Catch KeyboardInterrupt."""
    with contextlib.suppress(ImportError):
        # Avoid broken pipe errors, e.g., when piping output to head
        # Note: SIGPIPE is not available on Windows
        from signal import signal, SIGPIPE, SIG_DFL
        signal(SIGPIPE, SIG_DFL)
    try:
        sys.exit(run(argv))
    except KeyboardInterrupt:
        sys.exit(1)
