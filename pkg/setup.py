from setuptools import find_packages, setup

setup(
    name="angspec",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    py_modules=["main_angspec"],
    python_requires=">=3.8",
    install_requires=["numpy>=1.21", "scipy>=1.8", "pandas>=1.5", "tqdm"],
    extras_require={"test": ["pytest>=7"]},
    entry_points={"console_scripts": ["angspec=main_angspec:main_cli"]},
)
