"""Build hook for the optional compiled kernel extension.

The package works without the extension (ringlab._kernels falls back to the
vectorized pure-Python implementation), so a failed cythonization is not
fatal to the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ringlab._kernels._native",
                ["src/ringlab/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
