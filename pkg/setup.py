"""Build script.

The compiled Smith-normal-form kernel is optional: if Cython (or a C
compiler) is unavailable the package installs pure-Python only and
``adic_smith._snf`` falls back to the interpreted twin at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("adic_smith._snf_cy", ["src/adic_smith/_snf_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
