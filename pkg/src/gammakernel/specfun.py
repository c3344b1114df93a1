"""Special functions underlying the gamma kernel.

All functions accept a scalar or an array-like of arguments. A scalar
argument gives a float result; anything else gives an ndarray of the same
shape.
"""

import numpy as np
from scipy import special

from .errors import DomainError

LOG_SQRT_2PI = 0.5 * np.log(2.0 * np.pi)

# Below this point ln S(z) is evaluated directly; above it, by the
# asymptotic series, whose first omitted term is below 1e-12 at z = 10.
STIRLING_SERIES_FROM = 10.0


def _checked(z, name, strict):
    arr = np.asarray(z, dtype=float)
    bad = ~(arr > 0) if strict else ~(arr >= 0)
    if np.any(bad):
        first = arr[bad].flat[0] if arr.ndim else float(arr)
        raise DomainError(
            "%s: argument must be %s, got %r"
            % (name, "> 0" if strict else ">= 0", float(first))
        )
    return arr


def _out(arr, like):
    if np.ndim(like) == 0:
        return float(arr)
    return arr


def log_gamma(z):
    """ln Γ(z) for z > 0."""
    arr = _checked(z, "log_gamma", strict=True)
    return _out(special.gammaln(arr), z)


def digamma(z):
    """Ψ(z) = d/dz ln Γ(z) for z > 0."""
    arr = _checked(z, "digamma", strict=True)
    return _out(special.digamma(arr), z)


def log_stirling_ratio(z):
    """ln S(z) where S(z) = √(2π) e^{-z} z^{z+1/2} / Γ(z+1).

    Returns -inf at z = 0.
    """
    arr = np.atleast_1d(_checked(z, "stirling_ratio", strict=False))
    out = np.empty_like(arr)

    big = arr >= STIRLING_SERIES_FROM
    if np.any(big):
        zb = arr[big]
        inv = 1.0 / zb
        inv2 = inv * inv
        # ln Γ(z+1) - (z+1/2) ln z + z - ln √(2π), negated
        out[big] = -inv * (
            1.0 / 12.0
            - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0))
        )

    small = ~big
    if np.any(small):
        zs = arr[small]
        with np.errstate(divide="ignore"):
            out[small] = (
                LOG_SQRT_2PI
                - zs
                + (zs + 0.5) * np.log(zs)
                - special.gammaln(zs + 1.0)
            )
        # z^{z+1/2} -> 0 as z -> 0
        out[small] = np.where(zs == 0.0, -np.inf, out[small])

    return _out(out.reshape(np.shape(z)), z)


def stirling_ratio(z):
    """S(z) for z >= 0, computed in log-space; S(0) = 0."""
    return _out(np.exp(np.asarray(log_stirling_ratio(z))), z)
