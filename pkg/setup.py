#!/usr/bin/env python
# -*- coding: utf-8 -*-

__version__ = '0.1.0'

from setuptools import setup

requires = (
    'simplejson',
    'networkx',
    'pydot',
)

setup(
    name='dhmv',
    version=__version__,
    license='BSD',
    description='Mutual-visibility number of distance-hereditary graphs',
    long_description=open('README.md').read(),
    zip_safe=False,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    platforms='any',
    python_requires='>=3.9',
    install_requires=requires,
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    packages=[
        'dhmv',
        'dhmv.formats',
    ],
    entry_points={
        'console_scripts': ['dhmv = dhmv.cli:main'],
    },
)
