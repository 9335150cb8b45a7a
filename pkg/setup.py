import os

from setuptools import Extension, setup

# The compiled fixpoint kernel is optional: the package falls back to the
# pure-Python twin at import time.  Set COVER_LATTICE_PURE=1 to skip the
# extension build entirely.
ext_modules = []
if os.environ.get("COVER_LATTICE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cover_lattice._fixpoint", ["src/cover_lattice/_fixpoint.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
