"""Build script: compile the kernel extension when the toolchain allows.

The package is fully functional without the extension (gregory._kernels falls
back to the pure-Python twin), so a missing compiler or Cython must not break
installation.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain problems are non-fatal
            warnings.warn("skipping compiled kernels (%s); pure-Python fallback will be used" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn("skipping %s (%s); pure-Python fallback will be used" % (ext.name, exc))


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("gregory._core", ["src/gregory/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
