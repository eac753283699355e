"""Build script: compiles the optional F_p row-reduction kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so the extension is marked
optional and any build failure degrades to the fallback.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "psl._fpkernel",
                ["src/psl/_fpkernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
