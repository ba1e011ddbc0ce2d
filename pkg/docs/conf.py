# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Sphinx configuration."""

import os

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'ferkit'
copyright = u'2026, CERN'
author = u'CERN'

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join(os.path.dirname(__file__), '..',
                       'ferkit', 'version.py'),
          'rt') as fp:
    exec(fp.read(), g)
    version = g['__version__']

release = version

exclude_patterns = ['_build']

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------
html_theme = 'alabaster'

html_theme_options = {
    'description': 'Gradient and Laplacian augmented emotion recognition',
    'github_button': False,
    'show_powered_by': False,
}

html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}

htmlhelp_basename = 'ferkit_namedoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'ferkit', u'ferkit Documentation', [author], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
}

# Autodoc configuraton.
autoclass_content = 'both'
