import sys

import numpy as np
import pytest

from gammakernel.processes import ProcessSpec, SeededRng, generate, ingest_csv
from gammakernel.tasks.simulate import entry_point


def read_header(path):
    with open(path) as f:
        return f.readline()


def test_typical(command_tester, tmpdir):
    """Simulate an EAR(1) sample and write it with its provenance."""
    out = str(tmpdir.join("ear.csv"))

    result = command_tester.test(
        entry_point,
        [
            "gammakernel-simulate",
            "--process",
            "ear1",
            "--rho",
            "0.5",
            "--n",
            "100",
            "--seed",
            "7",
            "--out",
            out,
        ],
    )
    assert result == 0
    assert command_tester.event_types == [
        "generate-sample-start",
        "generate-sample-end",
        "write-sample-start",
        "write-sample-end",
    ]
    assert command_tester.messages[-2] == "[INFO] Wrote 100 rows to <tmpdir>/ear.csv"

    assert read_header(out) == (
        "# gammakernel simulate seed=7 stream=0 n=100 "
        "burn_in=1000,kind=ear1,rate=1.0,rho=0.5\n"
    )

    sample = ingest_csv(out, "x")
    expected = generate(SeededRng(7), ProcessSpec(kind="ear1", rho=0.5), 100)
    np.testing.assert_allclose(sample.xs, expected.xs, rtol=1e-15)


def test_regression(command_tester, tmpdir):
    """With --regression a y column is written too."""
    out = str(tmpdir.join("reg.csv"))

    result = command_tester.test(
        entry_point,
        [
            "gammakernel-simulate",
            "--process",
            "iid_gamma",
            "--shape",
            "2",
            "--regression",
            "constant",
            "--constant",
            "3",
            "--noise-var",
            "0.25",
            "--n",
            "20",
            "--seed",
            "7",
            "--stream",
            "2",
            "--out",
            out,
        ],
    )
    assert result == 0

    assert read_header(out) == (
        "# gammakernel simulate seed=7 stream=2 n=20 "
        "constant=3.0,kind=regression_over,noise_var=0.25,regfn=constant "
        "base:kind=iid_gamma,scale=1.0,shape=2.0\n"
    )
    sample = ingest_csv(out, "x", "y")
    assert sample.n == 20
    assert np.all(sample.ys > 0)


def test_reproducible(tmpdir):
    """The same seed and stream always give the same file."""
    contents = []
    for name in ("a.csv", "b.csv"):
        out = str(tmpdir.join(name))
        sys.argv = ["gammakernel-simulate", "--n", "50", "--seed", "1", "--out", out]
        assert entry_point() == 0
        with open(out, "rb") as f:
            contents.append(f.read())

    assert contents[0] == contents[1]


def test_empty_sample(command_tester, tmpdir):
    """Asking for no observations is a usage error."""
    result = command_tester.test(
        entry_point,
        [
            "gammakernel-simulate",
            "--n",
            "0",
            "--seed",
            "1",
            "--out",
            str(tmpdir.join("out.csv")),
        ],
    )
    assert result == 2
    assert not tmpdir.join("out.csv").exists()
    assert command_tester.event_types == [
        "generate-sample-start",
        "generate-sample-error",
    ]
    assert command_tester.messages[-1] == "[ERROR] --n must be >= 1, got 0"


@pytest.mark.parametrize(
    "args",
    [
        ["--process", "ear1", "--rho", "1.5"],
        ["--lambda", "0"],
        ["--regression", "rational", "--noise-var", "-1"],
        ["--seed", "-4"],
    ],
)
def test_bad_parameters(tmpdir, args):
    sys.argv = [
        "gammakernel-simulate",
        "--n",
        "5",
        "--seed",
        "1",
        "--out",
        str(tmpdir.join("out.csv")),
    ] + args
    assert entry_point() == 2
    assert not tmpdir.join("out.csv").exists()


def test_unknown_process(tmpdir):
    sys.argv = [
        "gammakernel-simulate",
        "--process",
        "arma",
        "--n",
        "5",
        "--seed",
        "1",
        "--out",
        str(tmpdir.join("out.csv")),
    ]
    with pytest.raises(SystemExit) as excinfo:
        entry_point()
    assert excinfo.value.code == 2
