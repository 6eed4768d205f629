"""Build script for the optional compiled elimination core.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); a failed compile therefore only
costs speed, not correctness.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Treat extension build failures as a warning, not an error."""

    def run(self):
        try:
            super().run()
        except PlatformError as exc:
            _warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, ValueError) as exc:
            _warn(exc)


def _warn(exc):
    print(
        f"WARNING: building the a1hit._gf2core extension failed ({exc}); "
        "falling back to the pure-Python GF(2) kernels",
        file=sys.stderr,
    )


if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "a1hit._gf2core",
                ["src/a1hit/_gf2core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
