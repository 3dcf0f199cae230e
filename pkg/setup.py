import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("COALWALK_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "coalwalk.kernels._fast",
                    ["src/coalwalk/kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: fall back to the pure-Python kernels.
        ext_modules = []

setup(ext_modules=ext_modules)
