import sys

from setuptools import Extension, setup

# The compiled kernel is an optional speedup; the package falls back to the
# pure-Python twin in basilica._canon_py when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("basilica._canon", ["src/basilica/_canon.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print(f"skipping compiled kernel build: {exc}", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
