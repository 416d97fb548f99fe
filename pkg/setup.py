import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HOPF_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/trihopf/_ckernel.pyx"], language_level="3"
        )
    except ImportError:
        pass  # pure-Python kernel remains available

setup(ext_modules=ext_modules)
