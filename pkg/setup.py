"""Build script: compiles the optional Cython reduction kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so any build failure here degrades
gracefully instead of blocking installation.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping compiled kernel ({exc}); "
                  "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "falling back to the pure-Python kernel")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("binpart._reduce_cy", sources=["src/binpart/_reduce_cy.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    print("warning: Cython not available; installing with the pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
