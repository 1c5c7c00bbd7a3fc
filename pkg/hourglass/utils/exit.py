# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Exit functions.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
import sys
import contextlib


def warn(msg):
    """
    Print a warning on the error stream.

    :param msg: warning message
    """
    sys.stderr.write(f'Warning: {msg}\n')


def err_exit(msg, status=1):
    """
    Print an error message and exit.

    :param msg: error message
    :param status: exit status
    """
    msg = str(msg)
    sys.stderr.write(msg + '\n')
    sys.exit(status)


class ExceptionExit(contextlib.AbstractContextManager):
    """
    Context manager to exit when an exception is raised.

    Only exceptions of the given types are turned into an exit; anything
    else propagates.
    """

    def __init__(self, additional_msg=None, status=1, exceptions=Exception):
        """
        Initialize the context manager.

        :param additional_msg: additional message to print
        :param status: exit status
        :param exceptions: exception type (or tuple of types) to catch
        """
        self.additional_msg = additional_msg
        self.status = status
        self.exceptions = exceptions

    def __exit__(self, exc_type, exc_value, _traceback):
        if exc_type is None or not issubclass(exc_type, self.exceptions):
            return None
        if self.additional_msg is not None:
            msg = f'{self.additional_msg}: {exc_value}'
        else:
            msg = exc_value
        err_exit(msg, self.status)
