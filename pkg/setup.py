"""
Setup script for the arithmonoid package.
"""

from setuptools import setup, find_packages

setup(
    name="arithmonoid",
    version="0.1.0",
    description="Exact arithmetic in the arithmetic inverse monoid, its classical submonoids and the p-adic norm",
    author="arithmonoid developers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"cli": ["static/*.txt"]},
    install_requires=[
        "pandas>=2.0.0",
        "pydantic>=2.0.0",
        "python-dotenv>=1.0.0",
        "typer>=0.9.0",
        "rich>=13.0.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0.0",
            "hypothesis>=6.0.0",
        ],
    },
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "arithmonoid=cli.main:app",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
