"""Build script: compiles the optional kernel extension when a toolchain is
available; the package falls back to the numpy kernels otherwise."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TETK_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension(
                "tetk._ckernels",
                ["src/tetk/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
