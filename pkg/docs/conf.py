# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'circsq'
copyright = '2020, Samuel Laferriere'
author = 'Samuel Laferriere'
release = '0.1.0'


# -- General configuration ---------------------------------------------------

extensions = [
'sphinx.ext.autodoc', 'sphinx.ext.napoleon', 'sphinx.ext.autosummary', 'sphinx.ext.mathjax'
]
autosummary_generate = True
# docstrings are numpydoc
napoleon_google_docstring = False
napoleon_numpy_docstring = True

# custom autosummary templates, see https://stackoverflow.com/a/62613202/4971151
templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'default'
