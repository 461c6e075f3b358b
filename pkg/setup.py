import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("ODDSYMP_PURE_PYTHON"):
    ext_modules = cythonize(
        [
            Extension(
                "oddsymp._kernels._ckernels",
                ["src/oddsymp/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
