from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # fallback backend only
    ext_modules = []
else:
    try:
        ext_modules = cythonize(
            [
                Extension(
                    "eulerfaces._speedups",
                    ["src/eulerfaces/_speedups.pyx"],
                    language="c++",
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # keep the pure-Python install working
        print(f"warning: not building eulerfaces._speedups: {exc}")
        ext_modules = []

setup(ext_modules=ext_modules)
