"""Build script for the optional compiled kernels.

The package is importable without the extension; lensgrid.kernels falls back
to the pure-Python implementations when lensgrid._ext is missing.
Build in place with:  python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("lensgrid._ext", ["src/lensgrid/_ext.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)
