# -*- coding: utf-8 -*-
#
# Setup the shadowbench module

from __future__ import print_function, absolute_import, division

from distutils.command.clean import clean
import shutil
import os

from setuptools import find_packages, setup

# metadata
DISTNAME = 'shadowbench'
DESCRIPTION = "Moving cast shadow detectors and their evaluation harness"
LICENSE = 'MIT'


def _version():
    # read the version without importing the package and its dependencies
    with open(os.path.join(DISTNAME, '__init__.py')) as f:
        for line in f:
            if line.startswith('__version__'):
                return line.split('=')[1].strip().strip("'\"")
    raise RuntimeError("Cannot find the version of %s" % DISTNAME)


VERSION = _version()

# get the installation requirements:
with open('requirements.txt') as req:
    REQUIREMENTS = [l.strip() for l in req.read().splitlines() if l.strip()]


# Custom clean command to remove build artifacts -- adopted from sklearn
class CleanCommand(clean):
    description = "Remove build artifacts from the source tree"

    def run(self):
        clean.run(self)
        if os.path.exists('build'):
            shutil.rmtree('build')
        for dirpath, dirnames, filenames in os.walk(DISTNAME):
            for filename in filenames:
                if filename.endswith('.pyc'):
                    print('Removing file: %s' % filename)
                    os.unlink(os.path.join(dirpath, filename))
            for dirname in dirnames:
                if dirname == '__pycache__':
                    print('Removing directory: %s' % dirname)
                    shutil.rmtree(os.path.join(dirpath, dirname))


def do_setup():
    setup(name=DISTNAME,
          packages=find_packages(include=[DISTNAME, DISTNAME + '.*']),
          include_package_data=True,
          package_data={DISTNAME + '.datasets': ['data/golden/*/*/*.png']},
          description=DESCRIPTION,
          license=LICENSE,
          version=VERSION,
          classifiers=[
              'Intended Audience :: Science/Research',
              'Intended Audience :: Developers',
              'Programming Language :: Python',
              'Programming Language :: Python :: 3',
              'Topic :: Scientific/Engineering :: Image Recognition',
              'Operating System :: OS Independent',
          ],
          keywords='computer-vision shadow-detection background-subtraction '
                   'tracking benchmark',
          python_requires='>=3.5',
          install_requires=REQUIREMENTS,
          entry_points={
              'console_scripts': [
                  'shadowbench = shadowbench.bench.cli:main',
              ],
          },
          zip_safe=False,
          cmdclass={'clean': CleanCommand})


if __name__ == '__main__':
    do_setup()
