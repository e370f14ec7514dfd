from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("twistedreal._kernels_cy", ["src/twistedreal/_kernels_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Without Cython the package installs pure Python; the kernel selector
    # falls back to the interpreted implementation at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
