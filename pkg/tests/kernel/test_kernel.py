import math

import numpy as np
import pytest
from scipy import stats

from gammakernel import kernel
from gammakernel.errors import DomainError, NumericalFailure
from gammakernel.kernel import (
    GammaRef,
    KernelParams,
    b_constant,
    b_constant_limit,
    b_constant_stirling,
    certify_lipschitz_constant,
    certify_sup_constant,
    gamma_expectation,
    kernel_eval,
    kernel_sup_bound,
    lipschitz_modulus,
    log_b_constant,
    moment_identity_check,
)


def exp1(y):
    return math.exp(-y)


def test_params_shape_scale():
    params = KernelParams(x=2, h=0.5)
    assert params.shape == 5.0
    assert params.scale == 0.5


@pytest.mark.parametrize("x, h", [(-1.0, 0.1), (1.0, 0.0), (1.0, -0.1)])
def test_params_domain(x, h):
    with pytest.raises(DomainError):
        KernelParams(x=x, h=h)


def test_gamma_ref():
    gref = GammaRef(p=2, x=1.0, h=0.1)
    assert gref.shape == pytest.approx(21.0)
    assert gref.scale == pytest.approx(0.05)
    assert gref.mode == 1.0
    assert gref.sd == pytest.approx(math.sqrt(21.0) * 0.05)


@pytest.mark.parametrize("x, h", [(0.0, 0.3), (0.5, 0.1), (2.0, 0.01)])
def test_kernel_matches_gamma_pdf(x, h):
    params = KernelParams(x=x, h=h)
    y = np.linspace(0.01, 5.0, 50)
    expected = stats.gamma.pdf(y, a=x / h + 1.0, scale=h)
    np.testing.assert_allclose(
        kernel_eval(params, y), expected, rtol=1e-10, atol=1e-300
    )


def test_kernel_support():
    assert kernel_eval(KernelParams(x=1.0, h=0.1), -0.5) == 0.0
    assert kernel_eval(KernelParams(x=1.0, h=0.1), 0.0) == 0.0
    assert kernel_eval(KernelParams(x=0.0, h=0.1), 0.0) == pytest.approx(10.0)


def test_kernel_no_overflow():
    """Shapes far beyond the range of Γ itself stay finite."""
    params = KernelParams(x=100.0, h=1e-4)
    value = kernel_eval(params, 100.0)
    assert math.isfinite(value)
    assert value * math.sqrt(100.0 * 1e-4) == pytest.approx(
        1.0 / math.sqrt(2.0 * math.pi), rel=1e-5
    )


@pytest.mark.parametrize("x, h", [(0.0, 0.2), (0.3, 0.1), (1.0, 0.01), (4.0, 1e-3)])
def test_kernel_is_a_density(x, h):
    total = gamma_expectation(GammaRef(p=1, x=x, h=h), lambda y: 1.0)
    assert total == pytest.approx(1.0, rel=1e-7)


def test_gamma_expectation_mean():
    """E G = shape·scale = x + h for the p = 1 law."""
    mean = gamma_expectation(GammaRef(p=1, x=1.5, h=0.05), lambda y: y)
    assert mean == pytest.approx(1.55, rel=1e-7)


def test_sup_bound_interior():
    params = KernelParams(x=1.0, h=0.05)
    bound = kernel_sup_bound(params)
    assert not bound.boundary
    y = np.linspace(0.5, 1.5, 10001)
    assert np.max(kernel_eval(params, y)) <= bound.value * (1 + 1e-12)
    assert bound.value == pytest.approx(kernel_eval(params, 1.0))


def test_sup_bound_boundary():
    bound = kernel_sup_bound(KernelParams(x=0.0, h=0.25))
    assert bound.boundary
    assert bound.value == 4.0


def test_certify_sup_constant():
    """sup K · √(xh) equals S(x/h)/√(2π), so stays below 1/√(2π)."""
    worst = certify_sup_constant([0.5, 1.0, 2.0], [0.1, 0.01, 0.001])
    assert 0.39 < worst < 1.0 / math.sqrt(2.0 * math.pi)


def test_b_constant_p1():
    assert log_b_constant(1, 0.7, 0.01) == pytest.approx(0.0, abs=1e-12)
    assert b_constant(1, 0.7, 0.01) == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("x, h", [(1.0, 0.01), (0.2, 0.05), (3.0, 1e-4)])
def test_b_constant_stirling_agrees(p, x, h):
    assert b_constant_stirling(p, x, h) == pytest.approx(
        b_constant(p, x, h), rel=1e-8
    )


@pytest.mark.parametrize("p", [2.0, 3.0])
def test_b_constant_interior_limit(p):
    x, h = 1.0, 1e-6
    rescaled = h ** ((p - 1.0) / 2.0) * b_constant(p, x, h)
    assert rescaled == pytest.approx(b_constant_limit(p, x), rel=1e-4)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.5])
@pytest.mark.parametrize("h", [0.5, 0.01, 1e-5])
def test_b_constant_boundary(p, h):
    """At x = 0, h^(p-1)·B = 1/p exactly for every h."""
    assert h ** (p - 1.0) * b_constant(p, 0.0, h) == pytest.approx(1.0 / p, rel=1e-12)
    assert b_constant_limit(p, 0.0) == 1.0 / p


@pytest.mark.parametrize(
    "fn, args",
    [
        (b_constant, (0.5, 1.0, 0.1)),
        (b_constant, (2.0, -1.0, 0.1)),
        (b_constant, (2.0, 1.0, 0.0)),
        (b_constant_stirling, (2.0, 0.0, 0.1)),
        (b_constant_limit, (0.9, 1.0)),
        (b_constant_limit, (2.0, -1.0)),
    ],
)
def test_b_constant_domain(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
@pytest.mark.parametrize("x, h", [(1.0, 0.05), (0.0, 0.05), (2.0, 0.002)])
def test_moment_identity(p, x, h):
    lhs, rhs = moment_identity_check(p, x, h, lambda y: y * y + 1.0, exp1)
    assert lhs == pytest.approx(rhs, rel=1e-6)


def test_moment_identity_gamma_density():
    g = stats.gamma(a=2.5, scale=0.8).pdf
    lhs, rhs = moment_identity_check(2.0, 0.7, 0.01, lambda y: 1.0, g)
    assert lhs == pytest.approx(rhs, rel=1e-6)


def test_quadrature_failure(monkeypatch):
    """A quadrature which can't meet its tolerance raises with the residual."""
    monkeypatch.setattr(kernel, "QUAD_LIMIT", 1)

    with pytest.raises(NumericalFailure) as excinfo:
        gamma_expectation(GammaRef(p=1, x=1.0, h=0.05), lambda y: math.sin(1e3 * y))

    assert excinfo.value.residual > 0
    assert "did not converge" in str(excinfo.value)


def test_lipschitz_modulus():
    y = np.linspace(1e-4, 10.0, 10001)
    assert lipschitz_modulus(1.0, 1.0, 0.1, y) == 0.0
    forward = lipschitz_modulus(1.0, 1.1, 0.1, y)
    assert forward > 0
    assert lipschitz_modulus(1.1, 1.0, 0.1, y) == forward


@pytest.mark.parametrize("x, u, grid", [(0.0, 1.0, [1.0]), (1.0, 2.0, [])])
def test_lipschitz_modulus_domain(x, u, grid):
    with pytest.raises(DomainError):
        lipschitz_modulus(x, u, 0.1, grid)


def test_certify_lipschitz_constant():
    y = np.linspace(1e-4, 20.0, 20001)
    cert = certify_lipschitz_constant(0.5, 2.0, [0.02, 0.1, 0.05], points=5, y_grid=y)

    assert sorted(cert.ratios) == [0.02, 0.05, 0.1]
    assert cert.constant == cert.ratios[0.1]
    assert all(r <= cert.constant for r in cert.ratios.values())
    assert cert.smallest_h == 0.02


def test_certify_lipschitz_domain():
    with pytest.raises(DomainError):
        certify_lipschitz_constant(0.0, 1.0, [0.1])


def test_kernel_normalized_on_grid():
    """K integrates to 1 over a 5 x 5 grid of (x, h) on [0, 10] x [1e-4, 0.5]."""
    for x in np.linspace(0.0, 10.0, 5):
        for h in np.geomspace(1e-4, 0.5, 5):
            total = gamma_expectation(GammaRef(p=1, x=x, h=h), lambda y: 1.0)
            assert total == pytest.approx(1.0, abs=1e-8), (x, h)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
@pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 5.0])
@pytest.mark.parametrize("h", [0.1, 0.01])
@pytest.mark.parametrize("phi", [lambda y: 1.0, lambda y: y], ids=["one", "id"])
def test_moment_identity_grid(p, x, h, phi):
    lhs, rhs = moment_identity_check(p, x, h, phi, exp1)
    assert abs(lhs - rhs) <= 1e-6 * (1.0 + abs(lhs))


@pytest.mark.parametrize("p", [2.0, 3.0])
@pytest.mark.parametrize("x", [0.5, 1.0, 4.0])
def test_b_constant_limit_gap_shrinks(p, x):
    gaps = [
        abs(h ** ((p - 1.0) / 2.0) * b_constant(p, x, h) - b_constant_limit(p, x))
        for h in [1e-2, 1e-4, 1e-6]
    ]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3


def test_gamma_expectation_smooth_limit():
    """E cos(G) tends to cos(x) as h shrinks, roughly linearly in h."""
    gaps = [
        abs(gamma_expectation(GammaRef(p=2, x=1.0, h=h), math.cos) - math.cos(1.0))
        for h in [0.1, 0.01, 0.001]
    ]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 2e-3


def test_lipschitz_modulus_linear_in_separation():
    y = np.linspace(1e-4, 10.0, 100001)
    wide = lipschitz_modulus(1.0, 1.001, 0.05, y)
    narrow = lipschitz_modulus(1.0, 1.0001, 0.05, y)
    assert wide / narrow == pytest.approx(10.0, rel=0.05)


def test_certify_lipschitz_constant_holds_down_the_schedule():
    cert = certify_lipschitz_constant(0.5, 3.0, [0.2, 0.1, 0.05])
    assert cert.constant == cert.ratios[0.2]
    assert cert.smallest_h == 0.05
