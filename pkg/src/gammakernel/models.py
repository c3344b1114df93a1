"""Curve models shipped with gammakernel.

Each density model knows its derivatives analytically; regression functions
are attached with :func:`with_regression`. The functions accept scalars or
numpy arrays.
"""

import math

import attr
import numpy as np
from scipy import special

from .asymptotics import CurveModel
from .errors import DomainError


def exponential(rate=1.0):
    """Exp(rate): f(x) = rate·e^(-rate·x)."""
    if not rate > 0:
        raise DomainError("rate must be > 0, got %r" % (rate,))
    lam = float(rate)

    return CurveModel(
        f=lambda x: lam * np.exp(-lam * x),
        f1=lambda x: -lam * lam * np.exp(-lam * x),
        f2=lambda x: lam**3 * np.exp(-lam * x),
        name="exponential(%g)" % lam,
    )


def _gamma_at_zero(m, c, theta):
    # f(x) = c·x^m·e^(-x/θ) = c·(x^m - x^(m+1)/θ + x^(m+2)/(2θ²) - ...)
    f = c if m == 0 else (0.0 if m > 0 else math.inf)
    if m == 0:
        f1 = -c / theta
    elif m == 1:
        f1 = c
    else:
        f1 = 0.0 if m > 1 else math.inf
    if m == 0:
        f2 = c / theta**2
    elif m == 1:
        f2 = -2.0 * c / theta
    elif m == 2:
        f2 = 2.0 * c
    else:
        f2 = 0.0 if m > 2 else math.inf
    return f, f1, f2


def gamma(shape, scale=1.0):
    """Gamma(shape, scale) density."""
    if not (shape > 0 and scale > 0):
        raise DomainError(
            "gamma model needs shape, scale > 0, got %r, %r" % (shape, scale)
        )
    k, theta = float(shape), float(scale)
    m = k - 1.0
    c = math.exp(-special.gammaln(k) - k * math.log(theta))
    at_zero = _gamma_at_zero(m, c, theta)

    def pick(x, which, value):
        if np.ndim(x) == 0:
            return at_zero[which] if x == 0 else value(x)
        x = np.asarray(x, dtype=float)
        safe = np.where(x > 0, x, 1.0)
        return np.where(x > 0, value(safe), at_zero[which])

    def f(x):
        return pick(x, 0, lambda y: c * np.exp(m * np.log(y) - y / theta))

    def f1(x):
        return pick(x, 1, lambda y: f(y) * (m / y - 1.0 / theta))

    def f2(x):
        return pick(
            x, 2, lambda y: f(y) * ((m / y - 1.0 / theta) ** 2 - m / (y * y))
        )

    return CurveModel(f=f, f1=f1, f2=f2, name="gamma(%g, %g)" % (k, theta))


@attr.s(frozen=True)
class RegressionFunction(object):
    name = attr.ib(type=str)
    R = attr.ib()
    R1 = attr.ib()
    R2 = attr.ib()


def rational():
    """R(x) = x / (1 + x)."""
    return RegressionFunction(
        name="rational",
        R=lambda x: x / (1.0 + x),
        R1=lambda x: 1.0 / (1.0 + x) ** 2,
        R2=lambda x: -2.0 / (1.0 + x) ** 3,
    )


def linear_sat():
    """R(x) = 1 - e^(-x)/2; R(0) = 1/2 and R'(0) = 1/2."""
    return RegressionFunction(
        name="linear_sat",
        R=lambda x: 1.0 - 0.5 * np.exp(-x),
        R1=lambda x: 0.5 * np.exp(-x),
        R2=lambda x: -0.5 * np.exp(-x),
    )


def constant(c=1.0):
    c = float(c)
    return RegressionFunction(
        name="constant(%g)" % c,
        R=lambda x: c + 0.0 * x,
        R1=lambda x: 0.0 * x,
        R2=lambda x: 0.0 * x,
    )


REGRESSION_FUNCTIONS = {
    "rational": lambda **_: rational(),
    "linear_sat": lambda **_: linear_sat(),
    "constant": lambda c=1.0, **_: constant(c),
}


def regression_function(name, **params):
    try:
        factory = REGRESSION_FUNCTIONS[name]
    except KeyError:
        raise DomainError(
            "unknown regression function %r, expected one of %s"
            % (name, ", ".join(sorted(REGRESSION_FUNCTIONS)))
        )
    return factory(**params)


def with_regression(model, regfn, noise_var):
    """Attach R, its derivatives and σ²(x) = R²(x)·noise_var to ``model``.

    This is the multiplicative-noise model Φ(Y) = R(X)·η with E η = 1 and
    Var η = noise_var.
    """
    if not noise_var >= 0:
        raise DomainError("noise variance must be >= 0, got %r" % (noise_var,))
    v = float(noise_var)
    R = regfn.R
    return attr.evolve(
        model,
        R=R,
        R1=regfn.R1,
        R2=regfn.R2,
        sigma2=lambda x: R(x) ** 2 * v,
        name="%s with %s regression, noise %g" % (model.name, regfn.name, v),
    )
