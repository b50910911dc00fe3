"""Build script for the optional compiled connectivity kernels.

The package works without the extension: kwaycut.kernels falls back to a
pure-Python implementation when kwaycut._core is missing or fails to build.
"""

from setuptools import Extension, setup

extensions = []
try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "kwaycut._core",
                sources=["src/kwaycut/_core.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=extensions)
