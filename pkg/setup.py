from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install: the package falls back to the interpreted finder.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("k5minus._finder_c", ["src/k5minus/_finder_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
