"""Build script: compiles the accelerator extension, from the .pyx source
when Cython is available, else from the shipped generated C file."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/mincw/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = [Extension("mincw._speedups", ["src/mincw/_speedups.c"])]

setup(ext_modules=ext_modules)
