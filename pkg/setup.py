import os

from setuptools import setup

# The compiled term-arithmetic kernel is optional: the package falls back to
# the pure-Python implementation in kronecker._kernel.pure when the extension
# is absent.  Set KRONECKER_SKIP_EXT=1 to skip compilation entirely.
ext_modules = []
if not os.environ.get("KRONECKER_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/kronecker/_kernel/fast.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
