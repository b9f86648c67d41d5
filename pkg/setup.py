"""Build script: compiles the optional integer sweep kernel when Cython is available.

The package works without the extension (a pure Python kernel is selected at
import time); set TRI_EXTREMAL_NO_EXT=1 to skip the build explicitly.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Never fail the install because the speedup extension did not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping compiled kernel {ext.name} ({exc})")


ext_modules = []
if not os.environ.get("TRI_EXTREMAL_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "tri_extremal._kernel_c",
                    ["src/tri_extremal/_kernel_c.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:  # pragma: no cover - cython not installed
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": _OptionalBuildExt})
