# -*- coding: utf-8 -*-
#
# qsphere documentation build configuration file.
#
# Only the values that differ from Sphinx's defaults are set here.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.napoleon',
    'numpydoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'qsphere'
copyright = u'2026, qsphere contributors'
author = u'qsphere contributors'

# Parse the version from the qsphere module.
try:
    import qsphere
    release = version = qsphere.__version__
except ImportError:
    with open('../qsphere/__init__.py') as f:
        for line in f:
            if line.find("__version__") >= 0:
                version = line.split("=")[1].strip()
                version = version.strip('"')
                version = version.strip("'")
                continue
    release = version

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'qspheredoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'qsphere.tex', u'qsphere Documentation',
     u'qsphere contributors', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'qsphere', u'qsphere Documentation',
     [author], 1)
]
