"""Setup для установки пакета."""

from setuptools import setup, find_packages

setup(
    name="cisgraphs",
    version="1.0.0",
    description="Распознавание CIS, равностабильных и смежных классов графов",
    author="cisgraphs",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "numpy>=1.24.0",
        "networkx>=3.1",
    ],
    python_requires=">=3.10",
    entry_points={
        "console_scripts": [
            "cisgraphs=cisgraphs.main:main",
        ],
    },
)
