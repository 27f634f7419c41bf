#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import os
import re

# Read the version from the package
version_file_paths = [
    os.path.join("src", "homnorm", "__init__.py"),
    os.path.join("homnorm", "__init__.py"),
]

version = None
for path in version_file_paths:
    if os.path.exists(path):
        try:
            with open(path, "r") as f:
                version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", f.read(), re.M)
                if version_match:
                    version = version_match.group(1)
                    print(f"Found version {version} in {path}")
                    break
        except Exception as e:
            print(f"Error reading {path}: {e}")

if not version:
    version = "dev"
    print(f"Warning: Unable to find version string, using default: {version}")

# Read long description from README
with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

requirements = [
    "rich>=12.0.0",
    "click>=8.0",
    "pydantic>=2.0",
    "pyyaml>=6.0",
    "python-dotenv>=0.20.0",
    "python-Levenshtein>=0.20.0",
    "sympy>=1.12",
]

setup(
    name="homnorm",
    version=version,
    description="Homotopy normality of finite group maps: crossed modules, bar constructions and homotopy actions",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="homnorm developers",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    include_package_data=True,
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.0", "hypothesis>=6.0"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="group theory, crossed modules, simplicial sets, homotopy",
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "homnorm=homnorm.homnorm:cli",
        ],
    },
)
