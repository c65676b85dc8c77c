# Sphinx configuration of the fieldbv documentation.
import os
import sys
sys.path.append(os.path.abspath('../'))

from fieldbv import __version__

project = 'fieldbv'
copyright = '2026'
author = 'fieldbv developers'
release = __version__
version = __version__

extensions = [
    'sphinx.ext.autosummary',
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.todo',
    'numpydoc',
    'sphinx.ext.doctest',
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'matplotlib': ('https://matplotlib.org/stable/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}

autosummary_generate = True
autoclass_content = 'both'
todo_include_todos = True
numpydoc_show_class_members = False

# doctests share one import
doctest_global_setup = 'import fieldbv as fbv'

exclude_patterns = ['build']

html_theme = 'pydata_sphinx_theme'
html_theme_options = {
    'logo': {'text': 'fieldbv'},
}
html_static_path = []

master_doc = 'index'
