"""Sphinx configuration file."""
# pylint: disable=wrong-import-position,invalid-name

# -- Path setup --------------------------------------------------------------

import os
import sys
sys.path.insert(0, os.path.abspath('..'))
from hourglass._version import get_versions  # NOQA
__version__ = get_versions()['version']

# -- Project information -----------------------------------------------------

project = 'hourglass'
copyright = '2025, The hourglass developers'  # pylint: disable=redefined-builtin
author = 'The hourglass developers'

# The full version, including alpha/beta/rc tags.
release = __version__
# The short X.Y version.
version = release.split('-')[0]


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx_mdinclude',
]
autodoc_mock_imports = [
    'numpy',
    'argcomplete',
    'configobj',
    'validate',
]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
