import os
from setuptools import setup, find_packages
from os import path


here = path.abspath(path.dirname(__file__))

with open(path.join(here, 'README.rst'), 'r', encoding='utf-8') as f:
    long_description = f.read()

# Find man pages.
manfiles = []
for r, d, f in os.walk(path.join(here, 'docs', 'man')):
    manfiles = [path.join(r, f) for f in f if f.endswith('.1.gz')]
    break

# Find construction recipes and their companion files.
recipes = []
for r, d, f in os.walk(path.join(here, 'recipes')):
    recipes = [path.join(r, f) for f in f]
    break

install_requires = []
if 'DEBBUILD' not in os.environ:
    install_requires = [
        'argcomplete >= 1.0',
        'prettytable',
        'pyaml',
        'sympy >= 1.12',
        'tqdm',
    ]

setup(
    name='septimic',
    version='0.1.0',
    description='Exact semitransvectants and invariants of binary forms.',
    long_description=long_description,
    long_description_content_type='text/x-rst',
    packages=find_packages(exclude=['tests']),
    license='Closed',
    python_requires='>=3.8, <4',
    install_requires=install_requires,
    data_files=[
        ('etc/bash_completion.d', ['etc/septimic_completion.sh']),
        ('usr/share/man/man1', manfiles),
        ('usr/share/septimic/recipes', recipes),
    ],
    entry_points={
        'console_scripts': [
            'septimic=septimic.client.main:main',
        ]
    },
)
