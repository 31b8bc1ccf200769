#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#

from setuptools import setup

import os
import re


# Utility function to read the README file.
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


# the package imports numpy, so the version is read from the source
def version():
    return re.search(r"__version__ = '([^']+)'", read(os.path.join('stieltjes', '__init__.py'))).group(1)


setup(name = 'stieltjes',
      version = version(),
      description = 'Exact solver for truncated indefinite Stieltjes moment problems',
      long_description = read('README.rst'),

      license = 'Apache License Version 2.0',

      keywords = ['moment problem', 'Stieltjes', 'continued fractions', 'Hankel', 'Pontryagin space'],
      classifiers=[
          'Development Status :: 4 - Beta',
          'Environment :: Console',
          'Intended Audience :: Education',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: Apache Software License',
          'Operating System :: OS Independent',
          'Programming Language :: Python',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics',
          ],
      packages = ['stieltjes'],
      python_requires = '>=3.6',
      install_requires = ['numpy>=1.8.0'],
      extras_require = {'pandas': ['pandas>=0.14.0'],
                        'test': ['pytest>=2.5.0', 'sympy>=1.0']},
      entry_points = {'console_scripts': ['stieltjes = stieltjes.sconsole:main']},
      data_files = [('', ['CHANGELOG.txt', 'README.rst', 'requirements.txt'])]
     )
