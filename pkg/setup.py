"""Build script for the optional compiled grid kernel.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the install degrades to the pure numpy kernel.
Set FUZZYTRACK_NO_EXT=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Warn instead of failing when the extension cannot be compiled."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: compiled kernel not built ({exc}); "
              "the pure-Python kernel will be used instead.")


def extensions():
    if os.environ.get("FUZZYTRACK_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("fuzzytrack._kernel", ["src/fuzzytrack/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
