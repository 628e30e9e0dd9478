"""Build script: compiles the optional kernel extension when Cython and a C
compiler are available, otherwise the package runs on the pure-Python
kernels with identical behavior."""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Extension build failures degrade to the pure-Python kernels."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"skipping compiled kernels: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping {ext.name}: {exc}", file=sys.stderr)


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "endospec._kernels._speedups",
                ["src/endospec/_kernels/_speedups.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
