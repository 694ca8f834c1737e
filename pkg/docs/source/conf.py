"""
Configuration file for the Sphinx documentation builder.

For the full list of built-in configuration values, see the documentation:
https://www.sphinx-doc.org/en/master/usage/configuration.html
"""

from typing import List

import quiverdeg

# -- Project information -----------------------------------------------------

project: str = "quiverdeg"
copyright: str = "Copyright &copy 2026, quiverdeg contributors"
author: str = "quiverdeg contributors"
version: str = quiverdeg.__version__
release: str = version

# -- General configuration ---------------------------------------------------

extensions: List[str] = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "autoapi.extension",
    "sphinx_copybutton",
    "myst_parser",
]

templates_path: List[str] = ["_templates"]
exclude_patterns: List[str] = ["_build", "Thumbs.db", ".DS_Store"]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable", None),
}

# -- Options for HTML output -------------------------------------------------

html_title = "quiverdeg: Degenerations of Dynkin Quiver Representations"
html_theme = "shibuya"
html_theme_options = {
    "dark_code": False,
}

html_copy_source = False
html_show_sourcelink = False

# -- Options for AutoDoc output ---------------------------------------------
autodoc_typehints = "description"
autodoc_preserve_defaults = True

# -- Options for AutoAPI output ---------------------------------------------
autoapi_root = "api"
autoapi_dirs = ["../../quiverdeg"]
autoapi_options = [
    "members",
    "show-inheritance",
    "private-members",
    "show-module-summary",
]

autoapi_add_toctree_entry = False
autoapi_keep_files = False
autoapi_member_order = "groupwise"

autoapi_python_class_content = "both"

# -- Options for MathJax output ---------------------------------------------
mathjax_path = "https://cdn.jsdelivr.net/npm/mathjax@3/es5/tex-chtml-full.js"
