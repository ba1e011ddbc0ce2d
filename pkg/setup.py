# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gradient and Laplacian augmented facial emotion recognition kit."""

import os

from setuptools import find_packages, setup

readme = open("README.rst").read()
history = open("CHANGES.rst").read()

tests_require = [
    "Sphinx>=3.1.1",
    "check-manifest>=0.42",
    "isort>=5.0.0",
    "pycodestyle>=2.6.0",
    "pydocstyle>=5.0.0",
    "pytest>=6.0.0",
    "pytest-cov>=2.10.0",
    "pytest-mock>=1.6.0",
]

extras_require = {"docs": ["Sphinx>=1.5.1"], "tests": tests_require}

extras_require["all"] = []
for name, reqs in extras_require.items():
    extras_require["all"].extend(reqs)

install_requires = [
    "click>=7.0",
    "jsonschema>=3.0.0,<5.0.0",
    "numpy>=1.20.0",
    # KDEF image decoding
    "Pillow>=8.0.0",
    # Sobel and Laplacian kernels with replicate borders
    "opencv-python-headless>=4.5.0",
    "pandas>=1.2.0",
    "sentry-sdk>=0.10.2",
    # pkg_resources for the packaged checkpoint schema
    "setuptools>=40.0.0,<81",
]

packages = find_packages(exclude=["tests", "tests.*"])

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join("ferkit", "version.py"), "rt") as fp:
    exec(fp.read(), g)
    version = g["__version__"]

setup(
    name="ferkit",
    version=version,
    description=__doc__,
    long_description=readme + "\n\n" + history,
    keywords="facial expression recognition MobileNetV2 Sobel Laplacian",
    license="MIT",
    author="CERN",
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    package_data={"ferkit.models": ["jsonschemas/*.json"]},
    platforms="any",
    entry_points={
        "console_scripts": ["ferkit = ferkit.cli:ferkit"],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    tests_require=tests_require,
    classifiers=[
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Image Recognition",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Development Status :: 3 - Alpha",
    ],
)
