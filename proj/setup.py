import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = sorted(glob.glob("src/*.cpp")) + ["src/python/bindings.cpp"]

setup(
    ext_modules=[
        Pybind11Extension(
            "irsplan._irsplan",
            sources,
            include_dirs=["include", "vendor", "/usr/include/eigen3"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
