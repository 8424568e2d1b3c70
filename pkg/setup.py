from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "gooddecomp._kernel",
                ["src/gooddecomp/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no cython: the pure-Python kernel is used at import time instead
    extensions = []

setup(ext_modules=extensions)
