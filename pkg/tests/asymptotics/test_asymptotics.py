import math

import numpy as np
import pytest

from gammakernel import models
from gammakernel.asymptotics import (
    BandwidthSchedule,
    CurveModel,
    bandwidth,
    bandwidth_conditions,
    density_bias,
    density_clt_variance,
    exact_density_bias,
    exact_density_variance,
    regression_bias,
    regression_clt_variance,
    standardize,
)
from gammakernel.errors import ContractViolation, DomainError


def test_bandwidth():
    assert bandwidth(BandwidthSchedule(c=1, alpha_exp=0.5), 100) == pytest.approx(0.1)
    assert bandwidth(BandwidthSchedule(c=2, alpha_exp=0.25), 16) == pytest.approx(1.0)


@pytest.mark.parametrize("n", [0, -3, 1.5])
def test_bandwidth_bad_n(n):
    with pytest.raises(ContractViolation):
        bandwidth(BandwidthSchedule(c=1, alpha_exp=0.5), n)


@pytest.mark.parametrize("c, alpha", [(0, 0.5), (-1, 0.5), (1, 0), (1, 1), (1, 1.2)])
def test_schedule_domain(c, alpha):
    with pytest.raises(DomainError):
        BandwidthSchedule(c=c, alpha_exp=alpha)


def test_model_rejects_wrong_derivative():
    with pytest.raises(ContractViolation) as excinfo:
        CurveModel(f=np.exp, f1=np.exp, f2=lambda x: 2 * np.exp(x), name="bad")
    assert "f''" in str(excinfo.value)


def test_density_bias(exp1):
    # (2 f' + x f'') / 2 = -e^-x (2 - x) / 2
    assert density_bias(exp1, 1.0, 0.01) == pytest.approx(-math.exp(-1) / 2 * 0.01)
    assert density_bias(exp1, 0.0, 0.01) == pytest.approx(-0.01)


@pytest.mark.parametrize("x, h", [(1.0, 0.05), (0.0, 0.05), (0.5, 0.01)])
def test_exact_density_bias(exp1, x, h):
    """E e^(-G) = (1 + h)^-(x/h + 1) for G ~ Gamma(x/h + 1, h)."""
    expected = (1.0 + h) ** (-(x / h + 1.0)) - math.exp(-x)
    assert exact_density_bias(exp1, x, h) == pytest.approx(expected, rel=1e-5)


def test_exact_bias_approaches_leading_term(exp1):
    h = 1e-3
    exact = exact_density_bias(exp1, 1.0, h)
    assert exact == pytest.approx(density_bias(exp1, 1.0, h), rel=0.01)


@pytest.mark.parametrize("x, h", [(1.0, 0.05), (0.0, 0.02)])
def test_exact_density_variance(exp1, x, h):
    n = 1000
    # E K^2 = B(2, n, x) (1 + h/2)^-(2x/h + 1)
    z = x / h
    log_b = (
        math.lgamma(2 * z + 1)
        - 2 * math.lgamma(z + 1)
        - (2 * z + 1) * math.log(2)
        - math.log(h)
    )
    second = math.exp(log_b) * (1.0 + h / 2.0) ** (-(2 * z + 1.0))
    first = (1.0 + h) ** (-(z + 1.0))
    expected = (second - first * first) / n
    assert exact_density_variance(exp1, x, h, n) == pytest.approx(expected, rel=1e-6)


def test_density_clt_variance(exp1):
    assert density_clt_variance(exp1, 1.0) == pytest.approx(
        math.exp(-1) / (2 * math.sqrt(math.pi))
    )
    assert density_clt_variance(exp1, 0.0) == 0.5


def test_density_bias_sign_change(exp1):
    """For Exp(1) the leading bias is (x - 2) e^-x h / 2."""
    for x in [i / 10.0 for i in range(51)]:
        bias = density_bias(exp1, x, 0.1)
        if x < 2.0:
            assert bias < 0, x
        elif x > 2.0:
            assert bias > 0, x
        else:
            assert bias == 0.0


def test_density_clt_variance_decreasing(exp1):
    values = [density_clt_variance(exp1, x) for x in np.linspace(0.1, 5.0, 50)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_density_clt_variance_needs_positive_density():
    with pytest.raises(DomainError):
        density_clt_variance(models.gamma(2.0), 0.0)


def test_regression_bias():
    model = models.with_regression(models.exponential(), models.rational(), 0.25)
    h = 0.01
    assert regression_bias(model, 0.0, h) == pytest.approx(h)

    # R' + x R''/2 + x R' f'/f, with f'/f = -1
    x = 1.0
    expected = (0.25 + 0.5 * (-0.25) - 0.25) * h
    assert regression_bias(model, x, h) == pytest.approx(expected)


def test_regression_clt_variance():
    model = models.with_regression(models.exponential(), models.linear_sat(), 0.5)
    r0 = 0.5
    assert regression_clt_variance(model, 0.0) == pytest.approx(r0 * r0 * 0.5 / 2.0)

    x = 2.0
    r = 1.0 - 0.5 * math.exp(-x)
    expected = r * r * 0.5 / (2 * math.sqrt(math.pi * x) * math.exp(-x))
    assert regression_clt_variance(model, x) == pytest.approx(expected)


def test_regression_quantities_need_regression(exp1):
    with pytest.raises(ContractViolation):
        regression_clt_variance(exp1, 1.0)
    with pytest.raises(ContractViolation):
        regression_bias(exp1, 1.0, 0.1)


def test_standardize():
    assert standardize(1.1, 1.0, 4.0, 100, 0.01, boundary=False) == pytest.approx(
        math.sqrt(100 * 0.1) * 0.1 / 2.0
    )
    assert standardize(1.1, 1.0, 4.0, 100, 0.01, boundary=True) == pytest.approx(
        1.0 * 0.1 / 2.0
    )
    with pytest.raises(DomainError):
        standardize(1.0, 1.0, 0.0, 100, 0.1, boundary=False)


@pytest.mark.parametrize(
    "alpha, interior, boundary",
    [(0.3, False, False), (0.38, False, True), (0.45, True, True), (0.8, True, True)],
)
def test_bandwidth_conditions(alpha, interior, boundary):
    cond = bandwidth_conditions(BandwidthSchedule(c=1, alpha_exp=alpha))
    assert cond.density_consistency
    assert cond.regression_consistency
    assert cond.interior_clt is interior
    assert cond.boundary_clt is boundary
    assert cond.holds("clt_density") is interior
    assert cond.holds("clt_density", boundary=True) is boundary
    assert cond.holds("consistency_density")
    assert cond.holds("bias_density")
