from setuptools import setup, find_packages

setup(
    name="sigma-surfaces",
    version="0.1",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    install_requires=[
        "python-dotenv>=0.19.0",
        "sqlalchemy>=1.4.23",
        "pydantic>=2.6",
        "numpy>=1.22",
        "sympy>=1.10",
        "click>=8.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0",
            "hypothesis>=6.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "sigsurf=sigma_surfaces.cli.main:main",
        ],
    },
)
