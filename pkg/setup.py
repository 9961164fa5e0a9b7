from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # -ffp-contract=off keeps the compiled kernel bit-identical to the
    # pure-Python twin (no FMA contraction).
    ext_modules = cythonize(
        [
            Extension(
                "pseudomie._numerov_cy",
                ["src/pseudomie/_numerov_cy.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
