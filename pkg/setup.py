#!/usr/bin/env python
# -*- coding: utf-8 -*-
# This code is distributed under the two-clause BSD license.
# Copyright (c) 2026 The sgraphs authors

import os
import re

from setuptools import setup

root_dir = os.path.abspath(os.path.dirname(__file__))


def get_version(package_name):
    version_re = re.compile(r"^__version__ = [\"']([\w_.-]+)[\"']$")
    package_components = package_name.split('.')
    path_components = package_components + ['__init__.py']
    with open(os.path.join(root_dir, *path_components)) as f:
        for line in f:
            match = version_re.match(line[:-1])
            if match:
                return match.groups()[0]
    return '0.1.0'


PACKAGE = 'sgraphs'


setup(
    name=PACKAGE,
    version=get_version(PACKAGE),
    author="The sgraphs authors",
    description="Exact spectra, character sums and theorem checks for the Cayley graphs S(k,q)",
    keywords=["graph", "spectrum", "cayley", "finite field", "character sum", "expander"],
    license="BSD",
    packages=[
        'sgraphs',
    ],
    scripts=['bin/sgraphs'],
    setup_requires=[
        'setuptools>=0.8',
    ],
    install_requires=[
        'numpy',
        'scipy',
        'networkx',
    ],
    tests_require=[
        'hypothesis',
    ],
    python_requires='>=3.6',
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    test_suite='tests',
)
