# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Configuration functions for hourglass.

The configuration holds the parameters of emptiness checks and oracles.
Every value has a default in ``configspec.conf``, so running without a
config file is the same as running with an empty one.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import os
from configobj import ConfigObj, flatten_errors
try:
    from configobj.validate import Validator, VdtValueError
except ImportError:
    # configobj < 5.1 ships validate as a top-level module
    from validate import Validator, VdtValueError
from ..utils import err_exit, parse_rational, ExceptionExit

DEFAULT_CONFIG_FILE = 'hourglass.conf'
# the configspec limits clock_bounds to one or two clocks
MAX_LEMMA_BOUND = 4


def _positive_rational(value):
    """Validator check for rational strings such as ``1/16``."""
    try:
        value = parse_rational(value)
    except ValueError as e:
        raise VdtValueError(value) from e
    if value <= 0:
        raise VdtValueError(value)
    return value


VALIDATOR = Validator({'positive_rational': _positive_rational})


def parse_configspec():
    """
    Parse the configspec file shipped with the package.

    :returns: configspec object
    """
    configspec_file = os.path.join(
        os.path.dirname(__file__), 'configspec.conf')
    return read_config(configspec_file)


def write_ok(filepath):
    """
    Check if it is ok to write to a file.

    :param filepath: path to the file
    :returns: True if it is ok to write to the file, False otherwise
    """
    if not os.path.exists(filepath):
        return True
    answer = input(f'"{filepath}" already exists. Overwrite it? [y/N] ')
    return answer.strip().lower() == 'y'


def write_sample_config(configspec, progname):
    """
    Write a sample config file, with every value set to its default.

    :param configspec: configspec object
    :param progname: program name, used as the file stem
    """
    sample = ConfigObj(configspec=configspec, default_encoding='utf8')
    sample.validate(VALIDATOR)
    # keep defaults in the output: they are the documentation
    sample.defaults = []
    for attr in 'initial_comment', 'comments', 'final_comment':
        setattr(sample, attr, getattr(configspec, attr))
    configfile = f'{progname}.conf'
    if not write_ok(configfile):
        return
    with open(configfile, 'wb') as fp:
        sample.write(fp)
    print(f'Sample config file written to: "{configfile}"')


def read_config(config_file, configspec=None):
    """
    Read a config file.

    Without a configspec, the file is read as a configspec itself.

    :param config_file: path to the config file, or None for the
        configspec defaults
    :param configspec: configspec object
    :returns: config object
    """
    options = {'file_error': True, 'default_encoding': 'utf8'}
    if configspec is None:
        options.update(interpolation=False, list_values=False, _inspec=True)
    else:
        options['configspec'] = configspec
    source = {} if config_file is None else config_file
    with ExceptionExit(additional_msg=f'Unable to read "{config_file}"'):
        config_obj = ConfigObj(source, **options)
    if configspec is not None:
        _validate_config(config_obj)
    return config_obj


def load_config(config_file, explicit, configspec):
    """
    Read the config file named on the command line, if any.

    A missing default config file is not an error: the configspec defaults
    are used instead.

    :param config_file: path to the config file
    :param explicit: True if the path was given on the command line
    :param configspec: configspec object
    :returns: validated config object
    """
    if not explicit and not os.path.exists(config_file):
        config_file = None
    return read_config(config_file, configspec)


def _validate_config(config_obj):
    """
    Validate the config object, exiting with status 1 on bad values.

    :param config_obj: config object
    """
    result = config_obj.validate(VALIDATOR, preserve_errors=True)
    if result is not True:
        problems = [
            f'"{key}": {error or "missing value"}'
            for _sections, key, error in flatten_errors(config_obj, result)
        ]
        err_exit('Invalid config value ' + '; '.join(problems))
    bad_bounds = [
        c for c in config_obj['clock_bounds'] if not 1 <= c <= MAX_LEMMA_BOUND]
    if bad_bounds:
        err_exit(
            f'"clock_bounds" values must be integers from 1 to '
            f'{MAX_LEMMA_BOUND}, got {bad_bounds}')
