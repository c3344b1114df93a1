import sys

import pytest

from gammakernel import models
from gammakernel.estimators import Sample
from gammakernel.processes import SeededRng

from .command import CommandTester


@pytest.fixture(autouse=True)
def save_argv():
    """Saves and restores sys.argv around each test.

    This is an autouse fixture, so tests can freely modify
    sys.argv without concern.
    """
    orig_argv = sys.argv[:]
    yield
    sys.argv[:] = orig_argv


@pytest.fixture(autouse=True)
def home_tmpdir(tmpdir, monkeypatch):
    """Points HOME environment variable underneath tmpdir
    for the duration of tests.
    """
    homedir = str(tmpdir.mkdir("home"))
    monkeypatch.setenv("HOME", homedir)


@pytest.fixture
def command_tester(tmpdir, caplog):
    """Yields a CommandTester for running commands and inspecting
    their logs.
    """
    yield CommandTester(tmpdir, caplog)


@pytest.fixture
def exp1():
    """The Exp(1) curve model."""
    return models.exponential(1.0)


@pytest.fixture
def exp1_sample():
    """A fixed i.i.d. Exp(1) sample of size 2000."""
    rng = SeededRng(1234)
    return Sample(xs=rng.generator.exponential(1.0, size=2000))


@pytest.fixture
def regression_sample():
    """A fixed sample from x ~ Exp(1), y = x/(1+x) * Gamma(4, 1/4)."""
    gen = SeededRng(4321).generator
    xs = gen.exponential(1.0, size=2000)
    ys = xs / (1.0 + xs) * gen.gamma(4.0, 0.25, size=2000)
    return Sample(xs=xs, ys=ys)


@pytest.fixture
def write_csv(tmpdir):
    """Returns a function writing text into a CSV file under tmpdir."""

    def write(text, name="input.csv"):
        path = str(tmpdir.join(name))
        with open(path, "wt") as f:
            f.write(text)
        return path

    return write
