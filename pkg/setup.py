"""Build script for the optional compiled bit-packing kernel.

The package is fully functional without the extension; codetrees.codec
falls back to the pure-Python kernel when the compiled one is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "codetrees._bitpack",
                ["src/codetrees/_bitpack.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
