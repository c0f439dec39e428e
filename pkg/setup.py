import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QUIVERLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/quiverlab/_termops_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python fallback is selected at import time; the compiled
        # kernel is an optimization, never a requirement.
        ext_modules = []

setup(ext_modules=ext_modules)
