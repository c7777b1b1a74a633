"""
Slicecraft
----------------------

Slicecraft partitions video frames into tiles and rectangular slices so that
the slices of a multi-thread encoder finish at about the same time, and
simulates the speed-up of the partitioning over recorded CTU encoding times.

Links
`````

* `development version <http://github.com/slicecraft/slicecraft-python>`

"""

from setuptools import find_packages
from setuptools import setup

try:
    readme = open('README.md').read()
except:
    readme = __doc__

setup(
    name='slicecraft',
    version='1.0.0',
    url='http://github.com/slicecraft/slicecraft-python',
    license='MIT',
    description='Tile and rectangular slice partitioning for multi-thread video encoding',
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=['config', 'data', 'test']),
    include_package_data=True,
    zip_safe=True,
    platforms='any',
    install_requires=[
        'pip-services3-commons >= 3.3.9, < 4.0',
        'pip-services3-components >= 3.5.0, < 4.0',
        'numpy >= 1.20'
    ],
    entry_points={
        'console_scripts': [
            'slicecraft=slicecraft.cli.main:main'
        ]
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Multimedia :: Video'
    ]
)
