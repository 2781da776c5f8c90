# -*- coding: utf-8 -*-
#
# edrvfl documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import re
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from edrvfl import __version__ as project_version

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'edrvfl'
copyright = u'2026, The edrvfl Developers'

# The short X.Y version.
version = re.findall(r'^\d+\.\d+', project_version)[0]
# The full version, including alpha/beta/rc tags.
release = project_version

exclude_patterns = []

pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

try:
    import sphinx_bootstrap_theme
    html_theme = 'bootstrap'
    html_theme_path = sphinx_bootstrap_theme.get_html_theme_path()
except ImportError:
    html_theme = 'nature'

html_static_path = ['_static']

html_show_sourcelink = False

html_show_copyright = True

htmlhelp_basename = 'edrvfldoc'

# -- Options for LaTeX output -------------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'edrvfl.tex', u'edrvfl Documentation',
   u'The edrvfl Developers', 'manual'),
]

keep_warnings = False
