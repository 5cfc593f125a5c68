"""Build script: compiles the native kernels when Cython is available.

The package works without the extension (a pure-Python/NumPy fallback is
selected at import time), so a failed extension build is not fatal to
development installs done with ``--no-build-isolation``.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "gah_lab._kernels",
                ["src/gah_lab/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                # FP contraction off keeps results bit-identical to the
                # pure-Python twin (no FMA in the iteration formulas).
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
