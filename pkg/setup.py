from setuptools import setup, find_packages

setup(
    name="octsum-verify",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "pydantic>=2.10.3",
        "pydantic-settings>=2.2.1",
        "python-dotenv>=1.0.1",
        "numpy>=1.26.4",
        "pandas>=2.1.4",
    ],
    extras_require={
        "test": ["pytest>=7.4"],
    },
    entry_points={
        "console_scripts": [
            "octsum=octsum.cli.routes:main_entry",
        ],
    },
    python_requires=">=3.9",
    description="Representability, escalation and bounded verification for sums of generalized octagonal numbers",
    keywords="number theory, octagonal numbers, quadratic forms, universality, verification",
)
