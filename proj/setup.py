"""CMake-driven build of the bhkdual._core extension.

The CMake tree is the single source of truth for compiling the C++ core;
this shim configures it with tests disabled and copies the produced
extension module into the wheel layout.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DBHK_BUILD_TESTS=OFF",
            "-DBHK_BUILD_PYTHON=ON",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(cmake_args, check=True)
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_core"], check=True)

        produced = sorted((build_dir / "python" / "bhkdual").glob("_core.*"))
        if not produced:
            raise RuntimeError("CMake did not produce the _core extension")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(produced[0], target)


setup(
    ext_modules=[CMakeExtension("bhkdual._core")],
    cmdclass={"build_ext": CMakeBuild},
)
