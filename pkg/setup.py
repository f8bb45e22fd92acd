from setuptools import setup, find_packages

setup(
    name="pysemiext",
    version="0.1.0",
    packages=find_packages(exclude=["pysemiext.tests"]),
    package_data={"pysemiext": ["data/*.txt"]},
    install_requires=[
        "numpy>=1.23",
        "networkx>=2.8",
    ],
    entry_points={
        "console_scripts": [
            "pysemiext=pysemiext.cli.main:main",
        ],
    },
)
