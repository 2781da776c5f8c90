#!/usr/bin/env python
#
# Copyright 2026 The edrvfl Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

from setuptools import setup, find_packages

from edrvfl import __version__ as version


def read_description():
    with open('README.rst') as fd:
        return fd.read()

setup(
    name='edrvfl',
    version=version,
    description="Ensemble deep random vector functional link networks "
                "with sample weighting and neuron pruning",
    long_description=read_description(),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
    ],
    keywords='RVFL randomized neural networks ensemble classification',
    author='The edrvfl Developers',
    license='Apache Software License',
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.6',
    install_requires=[
        'numpy>=1.17',
        'scipy>=1.4',
        'joblib>=0.14',
    ],
    entry_points={
        'console_scripts': [
            'edrvfl = edrvfl.cli:main',
        ],
    },
    data_files=[
        ('', ['README.rst']),
    ],
)
