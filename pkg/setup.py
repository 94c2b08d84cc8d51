import os

from setuptools import Extension, setup

# The compiled enumeration kernel is optional: the package falls back to the
# pure-Python kernel at import time if the extension is absent.
ext_modules = []
if os.environ.get("INVBARGRAPH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "invbargraph._speedups",
                    ["src/invbargraph/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
