# MIT License
# 
# Copyright (c) 2024 The spectracount Developers
# 
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
# 
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

'''
Eigenvalue densities of Hermitian matrices from contour-integral filters
'''
import setuptools
import codecs
import os.path


def read(rel_path):
    here = os.path.abspath(os.path.dirname(__file__))
    with codecs.open(os.path.join(here, rel_path), 'r') as fp:
        return fp.read()

def get_version(rel_path):
    for line in read(rel_path).splitlines():
        if line.startswith('__version__'):
            delim = '"' if '"' in line else "'"
            return line.split(delim)[1]
    else:
        raise RuntimeError("Unable to find version string.")


def setup_spectracount():
    setuptools.setup(
        name='spectracount',
        packages=setuptools.find_packages(include=['spectracount', 'spectracount.*']),
        version=get_version("spectracount/__init__.py"),
        license='MIT License',
        description='Stochastic contour-integral eigenvalue counts and a statevector model of their quantum readout',
        long_description=open('README.md').read(),
        long_description_content_type='text/markdown',
        install_requires=[
            "numpy",
            "scipy",
            "pandas",
            "h5py"
        ],
        entry_points={
            'console_scripts': ['spectra-count=spectracount.cli:main'],
        },
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'Programming Language :: Python',
            'License :: OSI Approved :: MIT License',
        ],
    )


if __name__ == '__main__':
    setup_spectracount()
