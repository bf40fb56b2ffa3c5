"""Build script: compiles the optional arithmetic kernel.

The compiled extension is a speedup only; the package falls back to the
pure-Python kernel when it is absent (set FFHYPER_PURE_PYTHON=1 to skip
the build entirely).
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("FFHYPER_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "ffhyper._speedups",
                    ["src/ffhyper/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
