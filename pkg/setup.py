from setuptools import setup, find_packages

setup(
    name="wk_necklace",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=[
        "numpy",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["wk-necklace=wk_necklace.cli:main"],
    },
    python_requires=">=3.10",
)
