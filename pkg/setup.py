"""Build script.

The compiled search engine is optional: if Cython or a C compiler is
unavailable the package installs anyway and falls back to the pure-Python
engine at import time.
"""

import os
import sys

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LINKCENSUS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("linkcensus._engine", ["src/linkcensus/_engine.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )
    except ImportError:
        print("warning: Cython not available, building without compiled engine",
              file=sys.stderr)

setup(ext_modules=ext_modules)
