"""Builds the optional compiled kernels; the package falls back to pure Python without them."""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, no Cython: ship the fallback
            print(f"warning: compiled kernels skipped ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} not built ({exc})")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("quasicount._ckernels", ["src/quasicount/_ckernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
