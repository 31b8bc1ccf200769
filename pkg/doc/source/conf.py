# -*- coding: utf-8 -*-
#
# stieltjes documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

from mock import Mock as MagicMock

class Mock(MagicMock):
    __all__ = []

    @classmethod
    def __getattr__(cls, name):
            return Mock()

MOCK_MODULES = ['numpy', 'pandas']
sys.modules.update((mod_name, Mock()) for mod_name in MOCK_MODULES)

import numpy
numpy.ndarray = Mock

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('../..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'stieltjes'
copyright = u'2026, stieltjes developers'

from stieltjes import __version__
version = __version__
release = __version__

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
htmlhelp_basename = 'stieltjesdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'stieltjes.tex', u'stieltjes Documentation',
   u'stieltjes developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'stieltjes', u'stieltjes Documentation',
     [u'stieltjes developers'], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
  ('index', 'stieltjes', u'stieltjes Documentation',
   u'stieltjes developers', 'stieltjes', 'Exact truncated indefinite Stieltjes moment problems',
   'Miscellaneous'),
]

autodoc_member_order = 'bysource'
