import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QFLOCAL_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "qflocal._fastkernel",
                    ["src/qflocal/_fastkernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: install the pure-Python package; the kernel layer
        # falls back automatically at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
