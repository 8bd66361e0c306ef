import os

from setuptools import setup

ext_modules = []
pyx = os.path.join("src", "fpcurves", "_kernel", "_core.pyx")
if os.environ.get("FPCURVES_NO_EXT") != "1" and os.path.exists(pyx):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [pyx],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
