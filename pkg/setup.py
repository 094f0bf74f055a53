from setuptools import setup, find_packages

setup(
    name="synthlib",
    version="0.1.0",
    description="Learning-guided program synthesis from input-output examples over a list DSL",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "numpy>=1.19",
        "pandas>=1.1",
        "tqdm==4.61.0",
        "more-itertools==8.8.0",
        "fastcore==1.3.1",
        "regex>=2020.10.28",
    ],
    entry_points={"console_scripts": ["synthlib=synthlib.harness.cli:main"]},
    classifiers=[
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: Apache Software License',
            'Topic :: Software Development :: Code Generators',
            'Programming Language :: Python',
            'Operating System :: OS Independent'
        ],
    python_requires='>=3.6'
)
