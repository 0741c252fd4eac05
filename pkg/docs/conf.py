#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# dynamic_grouping documentation build configuration file.

import sys
import os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import dynamic_grouping  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx_design',
    'sphinx_copybutton',
    'sphinx.ext.todo',
]

source_suffix = '.rst'
master_doc = 'index'

project = u'Dynamic Grouping'
copyright = u"2026, The dynamic_grouping developers"

version = dynamic_grouping.__version__
release = dynamic_grouping.__version__

exclude_patterns = ['_build']
pygments_style = 'default'

# -- Options for HTML output -------------------------------------------

html_theme = "pydata_sphinx_theme"
html_theme_options = {
    "logo": {"text": "Dynamic Grouping"},
    "show_toc_level": 2,
    "secondary_sidebar_items": ["page-toc", "sourcelink"],
}
html_show_sphinx = False
htmlhelp_basename = 'dynamic_groupingdoc'

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'dynamic-grouping',
     u'Dynamic Grouping Documentation',
     [u'The dynamic_grouping developers'], 1)
]
