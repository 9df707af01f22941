"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python implementation of
every kernel is selected at import time), so a failing compiler is reported
but never fatal.  Set SEMISTRONG_SKIP_NATIVE=1 to skip the build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: compiled kernels unavailable, falling back to pure "
            f"Python ({exc})",
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("SEMISTRONG_SKIP_NATIVE"):
        return []
    from Cython.Build import cythonize

    ext = Extension("semistrong._kernels", ["src/semistrong/_kernels.pyx"])
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
