from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/netslice/_speedups.pyx"],
        language_level="3",
    )
except ImportError:
    # Pure-Python fallback in netslice._kernels_py is used instead.
    ext_modules = []

setup(ext_modules=ext_modules)
