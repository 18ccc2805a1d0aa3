#! /usr/bin/env python

from os import path

from setuptools import find_packages, setup


def setup_package() -> None:
    root = path.abspath(path.dirname(__file__))
    with open(path.join(root, "README.md"), encoding="utf-8") as f:
        long_description = f.read()

    setup(
        name="orderlattice",
        version="0.1.0",
        packages=find_packages(include=("orderlattice", "orderlattice.*")),
        # Package type information
        package_data={"orderlattice": ["py.typed"]},
        # math.lcm with several arguments
        python_requires=">=3.9",
        install_requires=[
            "attrs",
            "click",
            "numpy",
            "orjson",
            "rich",
            "tqdm",
        ],
        extras_require={
            "test": [
                "black",
                "flake8",
                "hypothesis",
                "mypy",
                "networkx",
                "pytest",
                "sympy",
            ],
        },
        entry_points={
            "console_scripts": ["orderlattice = orderlattice.cli:main"],
        },
        license="MIT",
        description=(
            "Element-order spectra and order canonical E-lattices "
            "of finite abelian groups"
        ),
        long_description=long_description,
        classifiers=[
            "Development Status :: 3 - Alpha",
            "License :: OSI Approved :: MIT License",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        long_description_content_type="text/markdown",
    )


if __name__ == "__main__":
    setup_package()
