import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CHROMASTAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "chromastab.kernels._ckern",
                    sources=["src/chromastab/kernels/_ckern.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )
    except ImportError:
        # No Cython available: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
