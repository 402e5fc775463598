try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

import os

from boxworld import version


def read(fname):
    try:
        return open(os.path.join(os.path.dirname(__file__), fname)).read().strip()
    except IOError:
        return ''

setup(
    name='Boxworld',
    version=version,
    packages=[
        'boxworld',
        'boxworld.bin',
    ],
    package_data={
        'boxworld': ['fixtures/*.txt'],
    },
    license='MIT',
    keywords='nonsignaling boxes polytope ensembles extensions exact rational',
    description="Exact-arithmetic toolkit for non-signaling boxes, their ensembles and extensions",
    long_description=read('README.rst'),
    entry_points={
        'console_scripts': [
            'boxworld = boxworld.__main__:main',
        ]
    },
    install_requires=[
        "six",
    ],
    extras_require={
        'simplejson': ["simplejson"],
    },
    test_suite='tests',
)
