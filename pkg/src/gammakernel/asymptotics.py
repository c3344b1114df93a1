"""Closed-form asymptotic quantities of the gamma-kernel estimators.

Covers bandwidth schedules, the leading bias terms of D_n and R_n, the
limiting variances of their central limit theorems and the standardization
of an estimate against them. Interior points (x > 0) and the boundary
(x = 0) follow different rates and are handled by separate branches.
"""

import logging
import math

import attr

from .errors import ContractViolation, DomainError
from .kernel import GammaRef, b_constant, gamma_expectation

LOG = logging.getLogger("gammakernel")

# Derivatives supplied to a CurveModel are compared with central differences
# at these points.
PROBE_GRID = (0.25, 0.5, 1.0, 2.0, 4.0)
PROBE_TOLERANCE = 1e-5
PROBE_STEP = 1e-4


def _check_schedule(instance, attribute, value):
    if attribute.name == "c" and not value > 0:
        raise DomainError("schedule prefactor c must be > 0, got %r" % (value,))
    if attribute.name == "alpha_exp" and not 0 < value < 1:
        raise DomainError(
            "schedule exponent alpha must lie in (0, 1), got %r" % (value,)
        )


@attr.s(frozen=True, slots=True)
class BandwidthSchedule(object):
    """h(n) = c · n^(-alpha_exp)."""

    c = attr.ib(type=float, converter=float, validator=_check_schedule)
    alpha_exp = attr.ib(type=float, converter=float, validator=_check_schedule)


def bandwidth(schedule, n):
    if int(n) != n or n < 1:
        raise ContractViolation("sample size must be a positive integer, got %r" % n)
    return schedule.c * float(n) ** (-schedule.alpha_exp)


def _differs(expected, actual):
    return abs(expected - actual) > PROBE_TOLERANCE * (1.0 + abs(expected))


def _check_derivative(name, fn, derivative):
    if fn is None or derivative is None:
        return
    for x in PROBE_GRID:
        fd = (fn(x + PROBE_STEP) - fn(x - PROBE_STEP)) / (2.0 * PROBE_STEP)
        supplied = derivative(x)
        if _differs(fd, supplied):
            raise ContractViolation(
                "%s disagrees with the finite difference at x=%g: %r vs %r"
                % (name, x, supplied, fd)
            )


@attr.s(frozen=True)
class CurveModel(object):
    """True curves of a data-generating model.

    Derivatives are supplied analytically and checked against central
    differences on a probe grid when the model is built.
    """

    f = attr.ib()
    """Marginal density of X."""

    f1 = attr.ib(default=None)
    f2 = attr.ib(default=None)

    R = attr.ib(default=None)
    """Regression function x -> E(Φ(Y) | X = x)."""

    R1 = attr.ib(default=None)
    R2 = attr.ib(default=None)

    sigma2 = attr.ib(default=None)
    """Conditional variance x -> Var(Φ(Y) | X = x)."""

    name = attr.ib(type=str, default="")

    def __attrs_post_init__(self):
        _check_derivative("f'", self.f, self.f1)
        _check_derivative("f''", self.f1, self.f2)
        _check_derivative("R'", self.R, self.R1)
        _check_derivative("R''", self.R1, self.R2)

    @property
    def has_regression(self):
        return self.R is not None

    def numerator(self, x):
        """R(x)·f(x), the limit of N_n."""
        return self.R(x) * self.f(x)


def _require(model, *fields):
    missing = [f for f in fields if getattr(model, f) is None]
    if missing:
        raise ContractViolation(
            "curve model %s lacks %s" % (model.name or "<unnamed>", ", ".join(missing))
        )


def _positive_density(model, x):
    fx = float(model.f(x))
    if not fx > 0:
        raise DomainError("f(%g) must be > 0, got %r" % (x, fx))
    return fx


def density_bias(model, x, h):
    """Leading bias of D_n(x): (2 f'(x) + x f''(x)) / 2 · h."""
    _require(model, "f1", "f2")
    return (2.0 * model.f1(x) + x * model.f2(x)) / 2.0 * h


def regression_bias(model, x, h):
    """Leading bias of R_n(x).

    For x > 0 this is b(x)·h / f(x) with
    b(x) = R'(x) f(x) + (x/2) R''(x) f(x) + x R'(x) f'(x).
    At x = 0 it reduces to R'(0)·h.
    """
    _require(model, "R1", "R2", "f1")
    if x == 0:
        return float(model.R1(0.0)) * h
    fx = _positive_density(model, x)
    r1 = model.R1(x)
    b = r1 * fx + 0.5 * x * model.R2(x) * fx + x * r1 * model.f1(x)
    return float(b) * h / fx


def density_clt_variance(model, x):
    """f(x) / (2√(πx)) for x > 0; f(0)/2 at the boundary."""
    fx = _positive_density(model, x)
    if x == 0:
        return fx / 2.0
    return fx / (2.0 * math.sqrt(math.pi * x))


def regression_clt_variance(model, x):
    """σ²(x) / (2√(πx) f(x)) for x > 0; σ²(0) / (2 f(0)) at the boundary."""
    _require(model, "sigma2")
    fx = _positive_density(model, x)
    s2 = float(model.sigma2(x))
    if x == 0:
        return s2 / (2.0 * fx)
    return s2 / (2.0 * math.sqrt(math.pi * x) * fx)


def standardize(estimate, truth, variance, n, h, boundary):
    """Scale (estimate - truth) by the CLT rate and the limiting variance.

    The rate is √(n√h) in the interior and √(nh) at the boundary.
    """
    if not variance > 0:
        raise DomainError("variance must be > 0, got %r" % (variance,))
    rate = math.sqrt(n * h) if boundary else math.sqrt(n * math.sqrt(h))
    return rate * (estimate - truth) / math.sqrt(variance)


def exact_density_bias(model, x, h):
    """Finite-h bias E K(X) - f(x) = E f(G_1) - f(x), by quadrature."""
    mean = gamma_expectation(GammaRef(p=1, x=x, h=h), model.f)
    return mean - float(model.f(x))


def exact_density_variance(model, x, h, n):
    """Var D_n(x) for an i.i.d. sample of size n, by quadrature.

    Uses E K²(X) = B(2, n, x) · E f(G_2).
    """
    second = b_constant(2, x, h) * gamma_expectation(GammaRef(p=2, x=x, h=h), model.f)
    first = gamma_expectation(GammaRef(p=1, x=x, h=h), model.f)
    return (second - first * first) / n


@attr.s(frozen=True, slots=True)
class RateConditions(object):
    """Which rate requirements a schedule h = c·n^(-α) meets."""

    density_consistency = attr.ib(type=bool)
    """nh / log n -> ∞."""

    regression_consistency = attr.ib(type=bool)
    """n^θ h / log n -> ∞ for some θ < 1, and n√h -> ∞."""

    interior_clt = attr.ib(type=bool)
    """n√h -> ∞ and n√(h⁵) -> 0."""

    boundary_clt = attr.ib(type=bool)
    """nh -> ∞ and nh³ -> 0."""

    def holds(self, experiment, boundary=False):
        if experiment.startswith("consistency_density"):
            return self.density_consistency
        if experiment.startswith("consistency_regression"):
            return self.regression_consistency
        if experiment.startswith("clt"):
            return self.boundary_clt if boundary else self.interior_clt
        return True


def bandwidth_conditions(schedule):
    alpha = schedule.alpha_exp
    return RateConditions(
        density_consistency=alpha < 1,
        regression_consistency=alpha < 1,
        interior_clt=0.4 < alpha < 2,
        boundary_clt=1.0 / 3.0 < alpha < 1,
    )
