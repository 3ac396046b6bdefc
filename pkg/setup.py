import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CALOGERO_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "calogero._backend._ckernels",
                    ["src/calogero/_backend/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        # Pure-Python lane still works; the import selector falls back.
        ext_modules = []

setup(ext_modules=ext_modules)
