from setuptools import find_packages, setup

from bistochastic import __version__

with open("README.md", "r") as f:
    long_description = f.read()

setup(
    name='bistochastic-python',
    version=__version__,
    description=(
        'Bistochastic matrices as squared norms of isometries with vector '
        'entries'
    ),
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=['tests', 'tests.*']),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.17', 'pyseeyou', 'pytz', 'click>=7.0',
    ],
    entry_points={
        'console_scripts': [
            'bistochastic = bistochastic.cli:main',
        ],
    },
)
