import pytest

from gammakernel.errors import DomainError
from gammakernel.processes import ProcessSpec


def test_marginal_truths():
    assert ProcessSpec(kind="iid_exponential", rate=2.0).truth().f(0.0) == 2.0
    assert ProcessSpec(kind="ear1", rho=0.5, rate=3.0).truth().f(0.0) == 3.0
    assert ProcessSpec(kind="iid_gamma", shape=2.0).truth().f(0.0) == 0.0


def test_regression_truth():
    spec = ProcessSpec(
        kind="regression_over",
        base=ProcessSpec(kind="ear1", rho=0.2),
        regfn="rational",
        noise_var=0.5,
    )
    model = spec.truth()

    assert spec.is_regression
    assert not spec.is_iid
    assert spec.marginal.kind == "ear1"
    assert model.R(1.0) == 0.5
    assert model.sigma2(1.0) == pytest.approx(0.125)


def test_describe():
    spec = ProcessSpec(
        kind="regression_over",
        base=ProcessSpec(kind="iid_gamma", shape=2.0, scale=0.5),
        regfn="constant",
        constant=3.0,
    )
    assert spec.describe() == {
        "kind": "regression_over",
        "base": {"kind": "iid_gamma", "shape": 2.0, "scale": 0.5},
        "regfn": "constant",
        "noise_var": 0.0,
        "constant": 3.0,
    }
    assert ProcessSpec(kind="iid_exponential").describe() == {
        "kind": "iid_exponential",
        "rate": 1.0,
    }


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind="arma"),
        dict(kind="iid_exponential", rate=0.0),
        dict(kind="iid_gamma", shape=-1.0),
        dict(kind="ear1", rho=1.0),
        dict(kind="ear1", burn_in=-5),
        dict(kind="regression_over", regfn="rational"),
        dict(
            kind="regression_over",
            base=ProcessSpec(kind="iid_exponential"),
            regfn="cubic",
        ),
        dict(
            kind="regression_over",
            base=ProcessSpec(kind="iid_exponential"),
            regfn="rational",
            noise_var=-1.0,
        ),
    ],
)
def test_invalid(kwargs):
    with pytest.raises(DomainError):
        ProcessSpec(**kwargs)


def test_nested_regression_rejected():
    inner = ProcessSpec(
        kind="regression_over",
        base=ProcessSpec(kind="iid_exponential"),
        regfn="rational",
    )
    with pytest.raises(DomainError):
        ProcessSpec(kind="regression_over", base=inner, regfn="rational")
