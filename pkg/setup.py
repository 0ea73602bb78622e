"""
Setup script for the polyanti package.
"""

from setuptools import setup, find_packages

# Read the version from the package
with open("polyanti/__init__.py", "r") as f:
    for line in f:
        if line.startswith("__version__"):
            version = line.split("=")[1].strip().strip('"').strip("'")
            break

long_description = "Verification, decomposition and conjecture search for poly-antimatroid point sets."

setup(
    name="polyanti",
    version=version,
    author="polyanti contributors",
    description="Poly-antimatroid point sets: axioms, boundary chains, convex dimension and staircases",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
        "networkx>=2.6",
        "tqdm>=4.60",
    ],
    extras_require={
        "yaml": ["PyYAML>=5.4"],
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": [
            "polyanti=polyanti.app:main",
        ],
    },
)
