#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = ['Click>=7.0', 'numpy>=1.17', 'scipy>=1.6', 'pytools>=2021.1', ]

setup_requirements = [ ]

test_requirements = [ ]

setup(
    author="Thomas Reiser",
    author_email='reiser.thomas@gmail.com',
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    description="Chen-Hausdorff calculus and fractal vector calculus with a numerical verification harness",
    entry_points={
        'console_scripts': [
            'hausdorff-calculus=hausdorff_calculus.cli:main',
        ],
    },
    install_requires=requirements,
    license="Apache Software License",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='hausdorff_calculus',
    name='hausdorff_calculus',
    packages=find_packages(include=['hausdorff_calculus', 'hausdorff_calculus.*']),
    setup_requires=setup_requirements,
    test_suite='tests',
    tests_require=test_requirements,
    url='https://github.com/thomasreiser/hausdorff_calculus',
    version='1.0.0',
    zip_safe=False,
)
