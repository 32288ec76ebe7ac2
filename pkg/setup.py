import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="circsq",
    version="0.1.0",
    author="Samuel Laferriere",
    author_email="samlaf92@gmail.com",
    description="Coherent and squeezed states on the circle: theta functions, uncertainty measures and numerical checks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests"]), # https://packaging.python.org/guides/packaging-namespace-packages/
    install_requires=["numpy", "scipy"],
    entry_points={"console_scripts": ["circsq = circsq.experiments.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics",
    ],
    python_requires='>=3.7',
)
