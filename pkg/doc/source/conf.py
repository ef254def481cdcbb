#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# ptwig documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'ptwig'
copyright = '2026, the ptwig developers'
author = 'the ptwig developers'

version = '1.0'
release = '1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'nature'
html_static_path = ['_static']
htmlhelp_basename = 'ptwigdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'ptwig.tex', 'ptwig Documentation',
     'the ptwig developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'ptwig', 'ptwig Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'ptwig', 'ptwig Documentation',
     author, 'ptwig', 'Partial transposition and discrete Wigner functions '
     'for qudits.', 'Miscellaneous'),
]
