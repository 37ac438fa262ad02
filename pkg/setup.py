"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the build falls back to the
pure-Python kernels; the package works either way.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Skip the extension (with a warning) when compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc}); "
                  f"pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc}); "
                  f"pure-Python fallback will be used")


import os

try:
    from Cython.Build import cythonize

    pyx = "src/piwgen/kernels/_fast.pyx"
    extensions = cythonize(
        [Extension("piwgen.kernels._fast", [pyx], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    ) if os.path.exists(pyx) else []
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
