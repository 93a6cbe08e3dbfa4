"""Builds the conewright package: pure-Python wrappers plus a CMake-built
pybind11 extension.  The CMake project is configured in the build_ext temp
directory with the CLI and C++ tests switched off, and the produced module is
copied to wherever setuptools expects the extension."""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        import pybind11

        out_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                ext.sourcedir,
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                "-DCONEWRIGHT_BUILD_CLI=OFF",
                "-DCONEWRIGHT_BUILD_TESTS=OFF",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j"],
            cwd=build_dir,
            check=True,
        )
        built = sorted((build_dir / "python" / "conewright").glob("_core.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core extension module")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], out_path)


setup(
    packages=["conewright"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("conewright._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
