#!/usr/bin/env python

import itertools
import logging
import sys

from setuptools import setup


logging.basicConfig(stream=sys.stderr, level=logging.INFO)
log = logging.getLogger()

# python -W all setup.py ...
if 'all' in sys.warnoptions:
    log.level = logging.DEBUG

# Parse the version from the qsphere module.
with open('qsphere/__init__.py') as f:
    for line in f:
        if line.find("__version__") >= 0:
            version = line.split("=")[1].strip()
            version = version.strip('"')
            version = version.strip("'")
            continue

with open('README.rst') as f:
    readme = f.read()

# Runtime requirements.
inst_reqs = [
    'attrs>=19.2.0', 'click>=7.0', 'cligj>=0.5', 'click-plugins', 'sympy>=1.7']

extra_reqs = {
    'test': ['pytest>=3.1.0', 'pytest-cov>=2.2.0', 'hypothesis'],
    'docs': ['numpydoc', 'sphinx', 'sphinx-rtd-theme']}

# Add all extra requirements
extra_reqs['all'] = list(set(itertools.chain(*extra_reqs.values())))

setup_args = dict(
    name='qsphere',
    version=version,
    description="Exact computation in the quantum sphere algebras "
                "A(S^{2n+1}_q) and A(SU_q(2))",
    long_description=readme,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics'],
    keywords='quantum groups noncommutative algebra rewriting',
    license='BSD',
    python_requires='>=3.8',
    package_dir={'': '.'},
    packages=['qsphere', 'qsphere.qs'],
    entry_points='''
        [console_scripts]
        qs=qsphere.qs.main:main_group
    ''',
    include_package_data=True,
    zip_safe=False,
    install_requires=inst_reqs,
    extras_require=extra_reqs)

setup(**setup_args)
