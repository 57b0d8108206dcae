#!/usr/bin/python3

from setuptools import setup, find_packages


with open('README.md') as f:
    readme = f.read()

setup(
    name='pgftroute',
    version='0.9',
    description='Deterministic routing and static congestion analysis for parallel generalized fat-trees.',
    long_description=readme,
    python_requires='>=3.8',
    install_requires=['iniconfig', 'networkx', 'pydot', 'numpy>=1.22'],
    extras_require={'test': ['hypothesis']},
    packages=find_packages(exclude=('tests', 'docs')),
    py_modules=['pgftcli'],
)
