"""Summary statistics used to judge experiment outcomes."""

import numpy as np
from scipy import special, stats

from ..errors import ContractViolation


def _values(values, what):
    arr = np.asarray(values, dtype=float).ravel()
    if arr.size == 0:
        raise ContractViolation("%s needs a non-empty list of values" % what)
    return arr


def ks_distance(values):
    """Kolmogorov-Smirnov distance between the empirical CDF of ``values``
    and the standard normal CDF.

    Uses the sorted-sample formula max_i max(i/n - Φ(v_i), Φ(v_i) - (i-1)/n).
    """
    arr = np.sort(_values(values, "ks_distance"))
    n = arr.size
    cdf = special.ndtr(arr)
    upper = np.arange(1, n + 1) / n - cdf
    lower = cdf - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))


def ks_two_sample(a, b):
    """Two-sample Kolmogorov-Smirnov distance between ``a`` and ``b``."""
    a = _values(a, "ks_two_sample")
    b = _values(b, "ks_two_sample")
    return float(stats.ks_2samp(a, b).statistic)


def lag1_autocorrelation(values):
    """Sample lag-1 autocorrelation of a series."""
    arr = _values(values, "lag1_autocorrelation")
    if arr.size < 2:
        raise ContractViolation("lag1_autocorrelation needs at least 2 values")
    centered = arr - arr.mean()
    denom = float(np.dot(centered, centered))
    if denom == 0:
        return 0.0
    return float(np.dot(centered[:-1], centered[1:])) / denom


def quantile(values, q):
    return float(np.quantile(_values(values, "quantile"), q))
