# -*- coding: utf-8 -*-
#
# help-psl2 documentation build configuration file.

import os
import sys
import re
sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'help-psl2'
copyright = '2026, help-psl2 developers'
author = 'help-psl2 developers'

import help_psl2
version = help_psl2.__version__
release = re.match(r'[\d\.]+', help_psl2.__version__).group()

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'help-psl2doc'
