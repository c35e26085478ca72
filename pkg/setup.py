#!/usr/bin/env python
from setuptools import setup, find_packages
import re
import os


def get_version():
    fn = os.path.join(os.path.dirname(__file__), "help_psl2", "__init__.py")
    with open(fn) as f:
        return re.findall(r"__version__ = '([\d.\w]+)'", f.read())[0]


def get_long_description():
    readme = open('README.rst').read()
    changelog = open('CHANGES.rst').read()
    return "\n\n".join([
        readme,
        changelog.replace(':func:', '').replace(':ref:', '')
    ])

setup(
    name='help-psl2',
    version=get_version(),
    license='MIT license',
    long_description=get_long_description(),
    description="HeLP method for torsion units of prime power order "
                "in integral group rings of PSL(2, q)",
    zip_safe=False,
    include_package_data=True,
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.6',
    install_requires=[
        'attrs >= 19.2.0',
        'numpy >= 1.14.3',
        'scikit-learn >= 0.18',
        'tabulate >= 0.8.0',
    ],
    entry_points={
        'console_scripts': [
            'help-psl2 = help_psl2.cli:main',
        ],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
