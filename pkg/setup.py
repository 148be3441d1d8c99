#!/usr/bin/env python3
# --------------------------------------------------------------------
# Copyright (C) the PowerSums contributors 2026
#
# You are free to use, redistribute, or even print and eat a copy of
# this software so long as you include this copyright notice.
# --------------------------------------------------------------------
"""Setup for powersums"""
import sys
from setuptools import setup

try:
    from semantic_release import setup_hook
    setup_hook(sys.argv)
except ImportError:
    pass

with open("README.md", "r") as fh:
    long_description = fh.read()

package = "powersums"

exec(open("powersums/version.py").read())  # pylint: disable=W0122

setup(name = package,
        version = __version__,  # pylint: disable=E0602
        install_requires = ["rich"],
        setup_requires = ["pytest-runner"],
        tests_require = ["pytest", "hypothesis"],
        python_requires = ">=3.9",
        packages = ['.', 'powersums', 'powersums.commands', 'powersums.misc'],
        author = "the PowerSums contributors",
        description = "Exact sums of powers of integers by many independent routes, cross-checked against direct summation.",
        long_description = long_description,
        long_description_content_type = "text/markdown",
        keywords = ["power sums", "faulhaber", "bernoulli", "chebyshev", "exact arithmetic"],
        classifiers = [
            "Programming Language :: Python :: 3",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: 3.12",
            "License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)",
            "Operating System :: OS Independent",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        license = "MPL",
        test_suite = "tests",
        entry_points = {
            "console_scripts": [
                "psum=psum:main",
            ]
        },
        zip_safe = False
)
