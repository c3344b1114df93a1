from setuptools import setup, find_namespace_packages


def get_description():
    return "Gamma-kernel density and regression estimation for non-negative data"


def get_long_description():
    with open("README.md") as f:
        text = f.read()

    # Long description is everything after README's initial heading
    idx = text.find("\n\n")
    return text[idx:]


def get_requirements():
    with open("requirements.in") as f:
        return f.read().splitlines()


setup(
    name="gammakernel",
    version="0.1.0",
    packages=find_namespace_packages(where="src"),
    package_dir={"": "src"},
    package_data={"gammakernel.harness": ["presets/*.yaml"]},
    license="GNU General Public License",
    description=get_description(),
    long_description=get_long_description(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=get_requirements(),
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "gammakernel = gammakernel.cli:main",
            "gammakernel-estimate = gammakernel.tasks.estimate:entry_point",
            "gammakernel-simulate = gammakernel.tasks.simulate:entry_point",
            "gammakernel-verify = gammakernel.tasks.verify:entry_point",
        ]
    },
)
