#!/usr/bin/env python
# -*- coding: utf-8 -*-

import codecs
import os
import re

from setuptools import setup

root_dir = os.path.abspath(os.path.dirname(__file__))


def get_version(package_name):
    version_re = re.compile(r"^__version__ = [\"']([\w_.-]+)[\"']$")
    package_components = package_name.split('.')
    init_path = os.path.join(root_dir, *(package_components + ['__init__.py']))
    with codecs.open(init_path, 'r', 'utf-8') as f:
        for line in f:
            match = version_re.match(line[:-1])
            if match:
                return match.groups()[0]
    return '0.1.0'


PACKAGE = 'dorp'


setup(
    name='dorp-workbench',
    version=get_version(PACKAGE),
    description="Verification workbench for the monoid of monotone order-decreasing partial maps of a finite chain.",
    long_description=codecs.open(os.path.join(root_dir, 'README.rst'), 'r', 'utf-8').read(),
    keywords=['semigroups', 'transformation semigroups', 'green relations', 'schroder numbers'],
    packages=['dorp'],
    zip_safe=False,
    license='MIT',
    python_requires=">=3.8",
    install_requires=[],
    entry_points={
        'console_scripts': [
            'dorp-workbench = dorp.cli:main',
        ],
    },
    setup_requires=[
        'setuptools>=0.8',
    ],
    tests_require=[
        'hypothesis',
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    test_suite='',
    test_loader='unittest:TestLoader',
)
