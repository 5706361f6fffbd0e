from setuptools import Extension, setup

# The compiled kernels are an optional speedup; maxplus.backend falls back
# to the numpy implementation when the extension is absent.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "maxplus._kernels",
                ["src/maxplus/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
