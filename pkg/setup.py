from setuptools import Extension, setup
from Cython.Build import cythonize

# Build with `pip install -e . --no-build-isolation`.
# The kernel is optional at runtime: roughgrace.search falls back to the
# pure-Python implementation if the extension is missing.
setup(
    ext_modules=cythonize(
        [
            Extension(
                "roughgrace._speedups",
                ["src/roughgrace/_speedups.pyx"],
                extra_compile_args=["-O3"],
                language="c",
            )
        ],
        language_level=3,
    ),
)
