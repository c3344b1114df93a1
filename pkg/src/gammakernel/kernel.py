"""The gamma kernel K_{x/h+1, h} and its analytic companions.

The kernel at target point x with bandwidth h is the Gamma density with
shape x/h + 1 and scale h. Everything here is evaluated in log-space; the
direct formulas overflow once x/h exceeds roughly 170.
"""

import logging
import math
import os
import warnings

import attr
import numpy as np
from scipy import integrate, special

from .errors import DomainError, NumericalFailure
from .specfun import log_stirling_ratio

LOG = logging.getLogger("gammakernel")

QUAD_EPSREL = 1e-8
QUAD_EPSABS = 1e-14
QUAD_LIMIT = int(os.getenv("GAMMAKERNEL_QUAD_LIMIT") or "200")

# Half-width of the quadrature window, in standard deviations of the
# gamma law being integrated against.
QUAD_WINDOW_SDS = 40.0


def _positive(name):
    def check(_instance, _attribute, value):
        if not value > 0:
            raise DomainError("%s must be > 0, got %r" % (name, value))

    return check


def _non_negative(name):
    def check(_instance, _attribute, value):
        if not value >= 0:
            raise DomainError("%s must be >= 0, got %r" % (name, value))

    return check


@attr.s(frozen=True, slots=True)
class KernelParams(object):
    """Target point and bandwidth of a gamma kernel."""

    x = attr.ib(type=float, converter=float, validator=_non_negative("x"))
    """Evaluation point."""

    h = attr.ib(type=float, converter=float, validator=_positive("h"))
    """Bandwidth."""

    @property
    def shape(self):
        return self.x / self.h + 1.0

    @property
    def scale(self):
        return self.h


@attr.s(frozen=True, slots=True)
class GammaRef(object):
    """The auxiliary gamma law with shape p·x/h + 1 and scale h/p.

    Expectations under this law relate moments of K^p to moments of the
    data density (see :func:`b_constant`).
    """

    p = attr.ib(type=float, converter=float, validator=_positive("p"))
    x = attr.ib(type=float, converter=float, validator=_non_negative("x"))
    h = attr.ib(type=float, converter=float, validator=_positive("h"))

    @property
    def shape(self):
        return self.p * self.x / self.h + 1.0

    @property
    def scale(self):
        return self.h / self.p

    @property
    def mode(self):
        return self.x

    @property
    def sd(self):
        return math.sqrt(self.shape) * self.scale


@attr.s(frozen=True, slots=True)
class SupBound(object):
    value = attr.ib(type=float)
    """Supremum of the kernel over y."""

    boundary = attr.ib(type=bool, default=False)
    """True when x = 0, where the kernel is the exponential density and its
    supremum 1/h is attained at y = 0."""


def gamma_logpdf(y, shape, scale):
    """Log-density of Gamma(shape, scale) at y; -inf outside [0, inf)."""
    y = np.asarray(y, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (
            special.xlogy(shape - 1.0, y)
            - y / scale
            - special.gammaln(shape)
            - shape * math.log(scale)
        )
        out = np.where(y < 0, -np.inf, out)
    if out.ndim == 0:
        return float(out)
    return out


def kernel_eval(params, y):
    """K_{α,β}(y) for the kernel described by ``params``.

    Zero for y < 0. At y = 0 the value is 1/h when x = 0 and 0 otherwise.
    """
    out = np.exp(gamma_logpdf(y, params.shape, params.scale))
    if np.ndim(out) == 0:
        return float(out)
    return out


def kernel_sup_bound(params):
    """Supremum over y of the kernel, evaluated at the mode y* = x.

    For x > 0 this is the exact supremum and behaves like C/√(x·h).
    For x = 0 the exponential branch applies and 1/h is returned with
    ``boundary`` set.
    """
    if params.x == 0:
        return SupBound(value=1.0 / params.h, boundary=True)
    log_peak = gamma_logpdf(params.x, params.shape, params.scale)
    return SupBound(value=math.exp(log_peak))


def _check_b_args(p, x, h):
    if not p >= 1:
        raise DomainError("p must be >= 1, got %r" % (p,))
    if not h > 0:
        raise DomainError("h must be > 0, got %r" % (h,))
    if not x >= 0:
        raise DomainError("x must be >= 0, got %r" % (x,))


def log_b_constant(p, x, h):
    _check_b_args(p, x, h)
    z = x / h
    return (
        special.gammaln(p * z + 1.0)
        - p * special.gammaln(z + 1.0)
        - (p * z + 1.0) * math.log(p)
        - (p - 1.0) * math.log(h)
    )


def b_constant(p, x, h):
    """B(p, n, x) = Γ(px/h+1) / (Γ^p(x/h+1) p^{px/h+1} h^{p-1}).

    This is the factor in E(φ(T) K^p(T)) = B · E(φ(G_p) g(G_p)).
    """
    return math.exp(log_b_constant(p, x, h))


def b_constant_stirling(p, x, h):
    """B(p, n, x) through Stirling ratios, for x > 0:

    S^p(x/h) / (S(px/h) · (√(2πxh))^{p-1} · √p)
    """
    _check_b_args(p, x, h)
    if x == 0:
        raise DomainError("Stirling form of B needs x > 0")
    z = x / h
    log_b = (
        p * log_stirling_ratio(z)
        - log_stirling_ratio(p * z)
        - 0.5 * (p - 1.0) * math.log(2.0 * math.pi * x * h)
        - 0.5 * math.log(p)
    )
    return math.exp(log_b)


def b_constant_limit(p, x):
    """Limit of the rescaled B(p, n, x) as h -> 0.

    For x > 0, h^{(p-1)/2}·B -> 1/(√p (√(2πx))^{p-1}).
    For x = 0, h^{p-1}·B equals 1/p for every h.
    """
    if not p >= 1:
        raise DomainError("p must be >= 1, got %r" % (p,))
    if x == 0:
        return 1.0 / p
    if not x > 0:
        raise DomainError("x must be >= 0, got %r" % (x,))
    return 1.0 / (math.sqrt(p) * math.sqrt(2.0 * math.pi * x) ** (p - 1.0))


def _integrate(integrand, mode, sd, what):
    lo = max(0.0, mode - QUAD_WINDOW_SDS * sd)
    hi = mode + QUAD_WINDOW_SDS * sd

    pieces = [(lo, mode), (mode, hi)] if mode > lo else [(lo, hi)]
    total = 0.0
    residual = 0.0
    for a, b in pieces:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            out = integrate.quad(
                integrand,
                a,
                b,
                epsabs=QUAD_EPSABS,
                epsrel=QUAD_EPSREL,
                limit=QUAD_LIMIT,
                full_output=1,
            )
        value, abserr = out[0], out[1]
        if len(out) > 3 and abserr > 100 * max(QUAD_EPSABS, QUAD_EPSREL * abs(value)):
            raise NumericalFailure(
                "quadrature for %s on [%g, %g] did not converge: %s"
                % (what, a, b, out[3].strip()),
                residual=abserr,
            )
        total += value
        residual += abserr

    LOG.debug("quadrature %s = %r (residual %.3g)", what, total, residual)
    return total


def gamma_expectation(gref, fn):
    """E[fn(G)] for G distributed as ``gref``, by adaptive quadrature.

    The integration window is mode ± 40 standard deviations (clipped at
    zero), split at the mode.

    Raises:
        NumericalFailure: the quadrature did not converge within budget.
    """
    shape, scale = gref.shape, gref.scale

    def integrand(y):
        return fn(y) * math.exp(gamma_logpdf(y, shape, scale))

    return _integrate(integrand, gref.mode, gref.sd, "E[fn(G)] with %r" % (gref,))


def moment_identity_check(p, x, h, phi, g):
    """Evaluate both sides of E(φ(T) K^p(T)) = B(p,n,x)·E(φ(G_p) g(G_p)).

    T has density g. The left side is integrated directly against K^p;
    the right side goes through :func:`gamma_expectation`.

    Returns:
        (lhs, rhs) tuple of floats.
    """
    params = KernelParams(x=x, h=h)
    gref = GammaRef(p=p, x=x, h=h)
    b = b_constant(p, x, h)

    def lhs_integrand(y):
        return (
            phi(y)
            * math.exp(p * gamma_logpdf(y, params.shape, params.scale))
            * g(y)
        )

    lhs = _integrate(lhs_integrand, gref.mode, gref.sd, "E[phi K^p](T)")
    rhs = b * gamma_expectation(gref, lambda y: phi(y) * g(y))
    return lhs, rhs


def lipschitz_modulus(x, u, h, y_grid):
    """max over y_grid of |K_{x,h}(y) - K_{u,h}(y)| for x, u > 0."""
    if not (x > 0 and u > 0):
        raise DomainError("x and u must lie in a compact [a, b] with a > 0")
    y = np.asarray(y_grid, dtype=float)
    if y.size == 0:
        raise DomainError("y_grid must not be empty")
    if x == u:
        return 0.0
    diff = kernel_eval(KernelParams(x, h), y) - kernel_eval(KernelParams(u, h), y)
    return float(np.max(np.abs(diff)))


def certify_sup_constant(xs, hs):
    """Largest kernel_sup_bound(x, h)·√(x·h) over the given points (x > 0)."""
    worst = 0.0
    for x in xs:
        for h in hs:
            bound = kernel_sup_bound(KernelParams(x, h)).value
            worst = max(worst, bound * math.sqrt(x * h))
    return worst


@attr.s(frozen=True, slots=True)
class LipschitzCertificate(object):
    ratios = attr.ib(type=dict)
    """Bandwidth -> max of modulus·h^{3/2}/|x-u| over the tested pairs."""

    constant = attr.ib(type=float)
    """Ratio at the largest tested bandwidth; the calibrated constant."""

    smallest_h = attr.ib(type=float)
    """Smallest tested bandwidth whose ratio does not exceed ``constant``."""


def certify_lipschitz_constant(a, b, hs, separation=1e-3, points=9, y_grid=None):
    """Calibrate the constant C of |K_x - K_u| <= C |x-u| / h^{3/2} on [a, b]."""
    if not 0 < a < b:
        raise DomainError("need 0 < a < b, got a=%r b=%r" % (a, b))
    if y_grid is None:
        y_grid = np.linspace(1e-4, 4.0 * b + 10.0, 40001)

    ratios = {}
    for h in sorted(hs, reverse=True):
        worst = 0.0
        for x in np.linspace(a, b - separation, points):
            modulus = lipschitz_modulus(x, x + separation, h, y_grid)
            worst = max(worst, modulus * h**1.5 / separation)
        ratios[h] = worst
        LOG.debug("lipschitz ratio at h=%g: %.6g", h, worst)

    constant = ratios[max(ratios)]
    holding = [h for h, r in ratios.items() if r <= constant * (1.0 + 1e-9)]
    return LipschitzCertificate(
        ratios=ratios, constant=constant, smallest_h=min(holding)
    )
