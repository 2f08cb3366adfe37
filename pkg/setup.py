"""Build the optional compiled kernel; the package works without it."""
from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python kernel is used at runtime
    ext_modules = []
else:
    ext_modules = cythonize(["src/surfsym/arith/_ckernel.pyx"],
                            compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
