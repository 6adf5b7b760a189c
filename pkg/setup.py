import os
import re

from setuptools import setup

ROOT_DIR = os.path.abspath(os.path.dirname(os.path.relpath(__file__)))


def _read_version():
    path = os.path.join(ROOT_DIR, 'invsquare', '_version.py')
    with open(path) as fil:
        match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]", fil.read(),
                          re.M)
    return match.group(1)


install_requires = ['numpy>=1.13',
                    'scipy>=1.0',
                    'pyyaml']

extras_require = {'test': ['pytest', 'mpmath', 'flake8'],
                  'docs': ['sphinx', 'numpydoc', 'sphinxcontrib.autoprogram']}


setup(name='invsquare',
      version=_read_version(),
      license='BSD',
      description=('Bound states, well matching and continuum '
                   'orthogonality for the inverse-square potential'),
      long_description=(open('README.rst').read()
                        if os.path.exists('README.rst') else ''),
      classifiers=["Development Status :: 4 - Beta",
                   "License :: OSI Approved :: BSD License",
                   "Programming Language :: Python :: 3.6",
                   "Programming Language :: Python :: 3.7",
                   "Programming Language :: Python :: 3.8",
                   "Topic :: Scientific/Engineering :: Physics"],
      keywords='quantum mechanics inverse-square potential bessel numerov',
      packages=['invsquare', 'invsquare.test'],
      entry_points='''
        [console_scripts]
        invsquare=invsquare.cli:main
      ''',
      install_requires=install_requires,
      extras_require=extras_require,
      python_requires=">=3.6",
      zip_safe=False)
