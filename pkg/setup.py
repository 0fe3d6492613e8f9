from setuptools import setup
from re import match, S

with open('gcqc/__init__.py', 'r') as f:
    contents = f.read()
    longdesc = match('^"""(.*?)"""', contents, S).group(1)
    version = match(r'[\s\S]*__version__[^\'"]+[\'"]([^\'"]+)[\'"]', contents).group(1)
    del contents

with open('README.rst', 'w') as f2:
    f2.write(longdesc)

setup(
    name="gcqc",
    version=version,
    description="Generalized concatenated quantum codes.",
    long_description=longdesc,
    license="MIT",
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
    ],
    keywords='quantum error correction stabilizer codes concatenation',
    packages=["gcqc", "gcqc.tests"],
    package_data={"gcqc": ["specs/*.json"]},
    entry_points={"console_scripts": ["gcqc = gcqc.cli:main"]},
    install_requires=['galois', 'numpy>=1.17', 'six'],
    python_requires='>=3.8',
    test_suite='gcqc.tests',
    tests_require=['hypothesis'],
    extras_require={'test': ['hypothesis']},
)
