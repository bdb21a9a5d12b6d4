"""Build script: compiles the optional F_p linear-algebra kernel.

The package works without the extension (a numpy fallback is selected at
import time), so a failed compile only costs speed.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"gspecht: skipping compiled kernel ({exc})", file=sys.stderr)
        return []
    ext = Extension(
        "gspecht._core._kernels",
        ["src/gspecht/_core/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
