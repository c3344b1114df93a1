import logging

import numpy as np
from scipy import signal

from ..errors import ContractViolation, DomainError
from ..estimators import Sample
from .spec import EAR1_BURN_IN

LOG = logging.getLogger("gammakernel")


def _check_n(n):
    if int(n) != n or n < 1:
        raise ContractViolation("sample size must be a positive integer, got %r" % (n,))
    return int(n)


def generate_iid(rng, spec, n):
    """n independent draws from the marginal of an ``iid_*`` spec."""
    n = _check_n(n)
    gen = rng.generator
    if spec.kind == "iid_exponential":
        xs = gen.exponential(1.0 / spec.rate, size=n)
    elif spec.kind == "iid_gamma":
        xs = gen.gamma(spec.shape, spec.scale, size=n)
    else:
        raise ContractViolation("%s is not an i.i.d. process" % spec.kind)
    return Sample(xs=xs)


def generate_ear1(rng, rho, rate, n, burn_in=EAR1_BURN_IN):
    """Exponential AR(1): X_t = ρ X_{t-1} + I_t E_t.

    I_t ~ Bernoulli(1 - ρ) and E_t ~ Exp(rate), so the stationary marginal
    is exactly Exp(rate). The chain starts at 0 and its first ``burn_in``
    states are discarded.

    The innovations for the emitted states are drawn first, so ρ = 0
    reproduces :func:`generate_iid` with the same stream.
    """
    n = _check_n(n)
    if not 0 <= rho < 1:
        raise DomainError("rho must lie in [0, 1), got %r" % (rho,))
    if not rate > 0:
        raise DomainError("rate must be > 0, got %r" % (rate,))
    if burn_in < 0:
        raise DomainError("burn-in must be >= 0, got %r" % (burn_in,))

    gen = rng.generator
    emitted = gen.exponential(1.0 / rate, size=n)
    warmup = gen.exponential(1.0 / rate, size=burn_in)
    keep = gen.random(size=burn_in + n) < 1.0 - rho

    innovations = np.concatenate([warmup, emitted]) * keep
    states = signal.lfilter([1.0], [1.0, -rho], innovations)
    return Sample(xs=states[burn_in:])


def generate_regression(rng, base, regfn, noise_var, n):
    """Pairs (X_t, Φ(Y_t)) with Φ(Y_t) = R(X_t)·η_t.

    X comes from ``base``; η_t are i.i.d. Gamma(1/v, v) with v =
    ``noise_var`` (mean 1, variance v), or identically 1 when v = 0.
    """
    n = _check_n(n)
    if not noise_var >= 0:
        raise DomainError("noise variance must be >= 0, got %r" % (noise_var,))
    xs = generate(rng, base, n).xs
    if noise_var == 0:
        eta = np.ones(n)
    else:
        eta = rng.generator.gamma(1.0 / noise_var, noise_var, size=n)
    ys = np.asarray(regfn.R(xs), dtype=float) * eta
    return Sample(xs=xs, ys=ys)


def generate(rng, spec, n):
    """Draw a sample of size n from any ProcessSpec."""
    LOG.debug("generating n=%d from %s, stream %d", n, spec.kind, rng.stream)
    if spec.is_iid:
        return generate_iid(rng, spec, n)
    if spec.kind == "ear1":
        return generate_ear1(rng, spec.rho, spec.rate, n, burn_in=spec.burn_in)
    return generate_regression(
        rng, spec.base, spec.regression_function(), spec.noise_var, n
    )


__all__ = [
    "generate",
    "generate_iid",
    "generate_ear1",
    "generate_regression",
]
