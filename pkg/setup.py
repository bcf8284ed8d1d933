"""Build script: compiles the optional simplex kernel extension.

The extension is a pure accelerator; if Cython or a C compiler is missing the
build falls back to the pure-Python kernel and everything still works (see
capax.lp._backend).  Set CAPAX_SKIP_EXT=1 to skip compiling on purpose.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CAPAX_SKIP_EXT", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/capax/lp/_tableau_c.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # no Cython or no compiler: ship pure Python
        print(f"capax: skipping compiled kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
