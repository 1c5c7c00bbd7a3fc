# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Print region information for an hourglass automaton.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from .check import REFUSED_STATUS, graph_options
from .graph import RefusedError, build_region_graph
from .model_files import automaton_or_exit
from .oracle import enumerate_regions
from .regions import region_count_bound
from .translation import translate
from .utils import ExceptionExit, parse_rational, warn


def _print_graph(automaton, options, dump, count):
    with ExceptionExit(status=REFUSED_STATUS, exceptions=RefusedError):
        graph = build_region_graph(translate(automaton), options)
    for warning in graph.warnings:
        warn(warning)
    if dump:
        print('\n'.join(graph.dump()))
    if count:
        print(
            f'graph states={len(graph)} edges={graph.num_edges} '
            f'finals={len(graph.finals)} state-bound={graph.state_bound}')


def _print_enumeration(automaton, options, grid):
    with ExceptionExit(additional_msg='Invalid grid', exceptions=ValueError):
        grid = parse_rational(grid)
        if grid <= 0:
            raise ValueError(f'"{grid}" is not positive')
    bounds = automaton.bounds
    regions, count = enumerate_regions(bounds, options.equivalence, grid)
    for line in sorted(map(str, regions)):
        print(line)
    print(f'regions={count} grid={grid}')


def print_regions(config):
    """
    Print the region count bound, the region graph and grid regions, as
    requested on the command line.

    :param config: config object, with the parsed arguments in ``args``
    :returns: exit status
    """
    args = config['args']
    automaton = automaton_or_exit(args.file)
    options = graph_options(config)
    count = args.count or not (args.graph or args.enumerate)
    if count and automaton.clocks:
        print(f'region-count-bound {region_count_bound(automaton.bounds)}')
    if count or args.graph:
        _print_graph(automaton, options, args.graph, count)
    if args.enumerate is not None:
        _print_enumeration(automaton, options, args.enumerate)
    return 0
