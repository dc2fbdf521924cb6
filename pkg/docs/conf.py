import pathlib
import sys

sys.path.append(str(pathlib.Path(__file__).parent.parent))

extensions = ["sphinx.ext.autodoc", "sphinx_rtd_theme"]

html_theme = "sphinx_rtd_theme"

exclude_patterns = ["_build/**", ".sphinx-build/**", "README.rst"]

master_doc = "index"
source_suffix = ".rst"

pygments_style = "pastie"

project = "rainbowpath"

version = "0.1"
release = "0.1"
