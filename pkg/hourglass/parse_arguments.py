# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Argument parsing for hourglass.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import sys
import textwrap
import argparse
import argcomplete
from argcomplete.completers import FilesCompleter
from ._version import get_versions

BUILTIN_SUITES = (
    'three-clock', 'lemmas', 'regions', 'cross-check', 'bisimulation', 'all')

_model_completer = FilesCompleter(allowednames=('hga',))
_word_completer = FilesCompleter(allowednames=('word',))


class NewlineHelpFormatter(argparse.HelpFormatter):
    """
    Custom help formatter that preserves newlines in help messages.
    """
    def _split_lines(self, text, width):
        lines = []
        for line in text.splitlines():
            if len(line) > width:
                lines.extend(textwrap.wrap(line, width))
            else:
                lines.append(line)
        return lines


def _get_parent_parsers():
    """Get a dictionary of parent parsers."""
    configfile_parser = argparse.ArgumentParser(add_help=False)
    configfile_parser.add_argument(
        '-c',
        '--configfile',
        type=str,
        default=None,
        help='config file for checks and oracles (default: hourglass.conf, '
             'if it exists)'
    )
    model_parser = argparse.ArgumentParser(add_help=False)
    model_parser.add_argument(
        'file',
        type=str,
        metavar='FILE',
        help='hourglass automaton (.hga file)'
    ).completer = _model_completer
    graph_parser = argparse.ArgumentParser(add_help=False)
    graph_parser.add_argument(
        '-r',
        '--refine',
        action='store_true',
        default=False,
        help='track half-point marks; required when transitions toggle '
             'clocks (default: config value refine_half_points)'
    )
    graph_parser.add_argument(
        '-u',
        '--unsound',
        action='store_true',
        default=False,
        help='build region graphs for more than two clocks, without '
             'soundness guarantee (default: config value allow_unsound)'
    )
    return {
        'configfile_parser': configfile_parser,
        'model_parser': model_parser,
        'graph_parser': graph_parser,
    }


def _add_check_parser(subparser, parents):
    """Add the check subparser."""
    check_parser = subparser.add_parser(
        'check',
        parents=[
            parents['configfile_parser'],
            parents['model_parser'],
            parents['graph_parser'],
        ],
        help='decide language emptiness',
        formatter_class=NewlineHelpFormatter
    )
    check_parser.add_argument(
        '-w',
        '--witness',
        type=str,
        metavar='OUT',
        default=None,
        help='write the accepted timed word to OUT (.word format)'
    )
    check_parser.add_argument(
        '-s',
        '--stats',
        action='store_true',
        default=False,
        help='print region graph statistics on the error stream'
    )
    check_parser.epilog = (
        'Prints EMPTY or NONEMPTY.\n'
        'Exit status: 0 when a verdict is reached, 2 when the automaton is '
        'refused (more than two clocks without --unsound, toggles without '
        '--refine), 1 on errors.'
    )


def _add_simulate_parser(subparser, parents):
    """Add the simulate subparser."""
    simulate_parser = subparser.add_parser(
        'simulate',
        parents=[
            parents['configfile_parser'],
            parents['model_parser'],
        ],
        help='run a timed word',
        formatter_class=NewlineHelpFormatter
    )
    simulate_parser.add_argument(
        '-w',
        '--word',
        type=str,
        metavar='WFILE',
        required=True,
        help='timed word (.word file)'
    ).completer = _word_completer
    simulate_parser.add_argument(
        '-t',
        '--trace',
        action='store_true',
        default=False,
        help='print the states of the run'
    )
    simulate_parser.epilog = (
        'Prints "ACCEPT elapsed=<time> flips=<n>" (exit status 0) or '
        '"REJECT at step <k>" (exit status 3).'
    )


def _add_translate_parser(subparser, parents):
    """Add the translate subparser."""
    subparser.add_parser(
        'translate',
        parents=[
            parents['configfile_parser'],
            parents['model_parser'],
        ],
        help='print the translated extended timed automaton'
    )


def _add_regions_parser(subparser, parents):
    """Add the regions subparser."""
    regions_parser = subparser.add_parser(
        'regions',
        parents=[
            parents['configfile_parser'],
            parents['model_parser'],
            parents['graph_parser'],
        ],
        help='print region information',
        formatter_class=NewlineHelpFormatter
    )
    regions_parser.add_argument(
        '-g',
        '--graph',
        action='store_true',
        default=False,
        help='print the reachable region graph'
    )
    regions_parser.add_argument(
        '-n',
        '--count',
        action='store_true',
        default=False,
        help='print the region count bound and the size of the region graph '
             '(default when no other option is given)'
    )
    regions_parser.add_argument(
        '-e',
        '--enumerate',
        type=str,
        metavar='GRID',
        default=None,
        help='print every region met by grid valuations with step GRID '
             '(e.g., 1/16)'
    )


def _add_oracle_parser(subparser, parents):
    """Add the oracle subparser."""
    oracle_parser = subparser.add_parser(
        'oracle',
        parents=[parents['configfile_parser']],
        help='run brute-force oracles',
        formatter_class=NewlineHelpFormatter
    )
    group = oracle_parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        'file',
        nargs='?',
        type=str,
        metavar='FILE',
        help='cross-check emptiness and translation for this automaton'
    ).completer = _model_completer
    group.add_argument(
        '-b',
        '--builtin',
        type=str,
        choices=BUILTIN_SUITES,
        help='run a built-in suite:\n'
             'three-clock: delay closure fails with three clocks\n'
             'lemmas: equivalence and closure properties\n'
             'regions: region counts against the bound formula\n'
             'cross-check: emptiness verdicts on random automata\n'
             'bisimulation: translation on random automata\n'
             'all: every suite above'
    )
    oracle_parser.add_argument(
        '-t',
        '--trials',
        type=int,
        default=None,
        help='trials per property (lemmas) or number of random automata '
             '(cross-check, bisimulation) (default: config values)'
    )
    oracle_parser.add_argument(
        '-s',
        '--seed',
        type=int,
        default=None,
        help='master seed (default: $HGA_SEED, then config value seed)'
    )
    oracle_parser.epilog = (
        'Exit status: 0 if every property passes, 1 otherwise.'
    )


def _add_sampleconfig_parser(subparser):
    """Add the sampleconfig subparser."""
    subparser.add_parser('sampleconfig', help='write sample config file')


def _add_main_arguments(parser):
    """Add main arguments."""
    parser.add_argument(
        '-v',
        '--version',
        action='version',
        version=f"%(prog)s {get_versions()['version']}",
    )


def parse_arguments(argv=None):
    """
    Parse command line arguments.

    :param argv: arguments (default: ``sys.argv[1:]``)
    :returns: argparse.Namespace
    """
    parser = argparse.ArgumentParser(
        prog='hourglass',
        description='Check and simulate hourglass automata.')
    _add_main_arguments(parser)
    subparser = parser.add_subparsers(dest='action')
    parents = _get_parent_parsers()
    _add_check_parser(subparser, parents)
    _add_simulate_parser(subparser, parents)
    _add_translate_parser(subparser, parents)
    _add_regions_parser(subparser, parents)
    _add_oracle_parser(subparser, parents)
    _add_sampleconfig_parser(subparser)
    argcomplete.autocomplete(parser)
    args = parser.parse_args(argv)
    if args.action is None:
        parser.print_help()
        sys.exit(0)
    return args
