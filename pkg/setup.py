"""Builds the optional compiled kernels; everything else is in pyproject.toml."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PRIMETERM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("primeterm.kernels._kernels", ["src/primeterm/kernels/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
