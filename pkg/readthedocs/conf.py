# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys


d = os.path.dirname(os.path.realpath(__file__))
sys.path.insert(0, os.path.join(d, ".."))

import toybits


# -- Project information -----------------------------------------------------

project = "toybits"
copyright = "2026, toybits development team"
author = "toybits development team"
release = toybits.__version__


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
    "sphinx.ext.doctest",
    "sphinxcontrib.apidoc",
    "sphinx.ext.napoleon",
]

apidoc_module_dir = "../toybits"
apidoc_output_dir = "./api"
apidoc_excluded_paths = ["tests", "readthedocs"]
apidoc_separate_modules = True
apidoc_module_first = True
autodoc_default_options = {
    'special-members': '__init__,__call__',
}
# Hide undocumented members
os.environ["SPHINX_APIDOC_OPTIONS"] = "members,show-inheritance"

templates_path = ["_templates"]
language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# the diagram fixtures used in docstrings live in tests/testdata
doctest_global_setup = """
import os
os.chdir(os.path.join(os.path.dirname(os.path.abspath(".")), "tests", "testdata"))
"""


# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    "page_width": '1080px',
}


# -- Extension configuration -------------------------------------------------

napoleon_google_docstring = False

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "pandas": ("https://pandas.pydata.org/docs", None),
}
