#!/usr/bin/env python
#
# hausdorff_calculus documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import hausdorff_calculus  # noqa: E402

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
autodoc_member_order = 'bysource'

source_suffix = '.rst'
master_doc = 'index'

project = 'Hausdorff Calculus'
copyright = "2026, Thomas Reiser"
author = "Thomas Reiser"

version = hausdorff_calculus.__version__
release = hausdorff_calculus.__version__

language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_theme = 'alabaster'
htmlhelp_basename = 'hausdorff_calculusdoc'

man_pages = [
    (master_doc, 'hausdorff_calculus', 'Hausdorff Calculus Documentation', [author], 1)
]
