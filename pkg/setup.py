"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the brute-force
oracle inner loops. If Cython or a C compiler is unavailable the extension is
skipped and the numpy fallback in ``secrecap._kernels_py`` is used instead.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "secrecap._kernels_cy",
                ["src/secrecap/_kernels_cy.pyx"],
                # keep IEEE semantics so both backends agree to the last few ulp
                extra_compile_args=["-O2", "-ffp-contract=off"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
