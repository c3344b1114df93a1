"""Gamma-kernel estimators of a density, a weighted numerator and a regression.

Every estimate is a sum over the sample. The sum always runs over the rows
in ascending (x, y) order, using numpy's pairwise reduction, so that an
estimate depends on the sample as a multiset and never on row order.
"""

import logging

import attr
import numpy as np
from more_executors import Executors
from more_executors.futures import f_sequence

from .errors import ContractViolation, DomainError
from .kernel import KernelParams, kernel_eval

LOG = logging.getLogger("gammakernel")


def _readonly(values):
    arr = np.array(values, dtype=float, ndmin=1)
    arr.setflags(write=False)
    return arr


def _optional_readonly(values):
    if values is None:
        return None
    return _readonly(values)


@attr.s(frozen=True, eq=False)
class Sample(object):
    """Observations X_1..X_n and optionally Φ(Y_1)..Φ(Y_n).

    Φ is applied by whoever builds the sample; ``ys`` holds transformed
    values.
    """

    xs = attr.ib(converter=_readonly)
    ys = attr.ib(default=None, converter=_optional_readonly)
    _order = attr.ib(init=False, repr=False)

    def __attrs_post_init__(self):
        if self.xs.ndim != 1 or self.xs.size == 0:
            raise ContractViolation("empty sample")
        if not np.all(np.isfinite(self.xs)):
            raise ContractViolation("sample contains non-finite x")
        if np.any(self.xs < 0):
            raise DomainError(
                "sample contains negative x: %r" % (float(self.xs.min()),)
            )
        if self.ys is not None:
            if self.ys.shape != self.xs.shape:
                raise ContractViolation(
                    "xs and ys differ in length: %d != %d"
                    % (self.xs.size, self.ys.size)
                )
            if not np.all(np.isfinite(self.ys)):
                raise ContractViolation("sample contains non-finite y")
            order = np.lexsort((self.ys, self.xs))
        else:
            order = np.argsort(self.xs, kind="stable")
        object.__setattr__(self, "_order", order)

    @property
    def n(self):
        return self.xs.size

    @property
    def has_ys(self):
        return self.ys is not None

    def sorted_xs(self):
        return self.xs[self._order]

    def sorted_ys(self):
        if self.ys is None:
            raise ContractViolation("sample has no y values")
        return self.ys[self._order]

    def __len__(self):
        return self.n


def _check_points(instance, _attribute, points):
    if points.ndim != 1 or points.size == 0:
        raise ContractViolation("evaluation grid must not be empty")
    if not np.all(np.isfinite(points)):
        raise ContractViolation("evaluation grid contains non-finite points")
    if points.size > 1 and not np.all(np.diff(points) > 0):
        raise ContractViolation("evaluation grid must be strictly increasing")


@attr.s(frozen=True, eq=False)
class EvaluationGrid(object):
    """Strictly increasing points lying in [a, b], a >= 0."""

    points = attr.ib(converter=_readonly, validator=_check_points)
    a = attr.ib(type=float, converter=float)
    b = attr.ib(type=float, converter=float)

    def __attrs_post_init__(self):
        if not 0 <= self.a <= self.b:
            raise ContractViolation(
                "grid bounds must satisfy 0 <= a <= b, got a=%r b=%r"
                % (self.a, self.b)
            )
        if self.points[0] < self.a or self.points[-1] > self.b:
            raise ContractViolation(
                "grid points must lie in [%r, %r]" % (self.a, self.b)
            )

    @classmethod
    def linspace(cls, a, b, count):
        """Linearly spaced grid on [a, b], endpoints included."""
        count = int(count)
        if a == b and count == 1:
            return cls(points=[a], a=a, b=b)
        if count < 2:
            raise ContractViolation("grid count must be >= 2, got %d" % count)
        if not a < b:
            raise ContractViolation("grid needs a < b, got a=%r b=%r" % (a, b))
        return cls(points=np.linspace(a, b, count), a=a, b=b)

    def __len__(self):
        return self.points.size


@attr.s(frozen=True, slots=True)
class RegressionValue(object):
    """R_n(x), with ``starved`` set when D_n(x) = 0 and the value is the
    conventional 0."""

    value = attr.ib(type=float)
    starved = attr.ib(type=bool, default=False)

    def __float__(self):
        return self.value


@attr.s(frozen=True, eq=False)
class EstimateSeries(object):
    grid = attr.ib()
    density = attr.ib(converter=_readonly)
    h = attr.ib(type=float)
    n = attr.ib(type=int)
    numerator = attr.ib(default=None, converter=_optional_readonly)
    regression = attr.ib(default=None, converter=_optional_readonly)
    starved = attr.ib(default=None)
    """Per grid point, True where D_n = 0 made R_n uninformative."""

    @property
    def has_regression(self):
        return self.regression is not None


def _weights(xs, x, h):
    return kernel_eval(KernelParams(x=x, h=h), xs)


def _density(xs, x, h):
    return float(np.sum(_weights(xs, x, h))) / xs.size


def _numerator(xs, ys, x, h):
    return float(np.sum(ys * _weights(xs, x, h))) / xs.size


def _regression(xs, ys, x, h):
    weights = _weights(xs, x, h)
    d = float(np.sum(weights)) / xs.size
    num = float(np.sum(ys * weights)) / xs.size
    if d == 0.0:
        return d, num, RegressionValue(0.0, starved=True)
    return d, num, RegressionValue(num / d)


def _check_h(h):
    if not h > 0:
        raise DomainError("bandwidth must be > 0, got %r" % (h,))


def density_estimate(sample, x, h):
    """D_n(x) = (1/n) Σ K_{x/h+1, h}(X_t)."""
    _check_h(h)
    return _density(sample.sorted_xs(), x, h)


def numerator_estimate(sample, x, h):
    """N_n(x) = (1/n) Σ Φ(Y_t) K_{x/h+1, h}(X_t)."""
    _check_h(h)
    if not sample.has_ys:
        raise ContractViolation("numerator estimate needs y values")
    return _numerator(sample.sorted_xs(), sample.sorted_ys(), x, h)


def regression_estimate(sample, x, h):
    """R_n(x) = N_n(x) / D_n(x), or 0 flagged as starved when D_n(x) = 0.

    Returns:
        RegressionValue
    """
    _check_h(h)
    if not sample.has_ys:
        raise ContractViolation("regression estimate needs y values")
    return _regression(sample.sorted_xs(), sample.sorted_ys(), x, h)[2]


def estimate_on_grid(sample, grid, h, with_regression=False, executor=None):
    """Evaluate the estimators at every point of ``grid``.

    Points may be spread over ``executor``; results are gathered in grid
    order and each point's sum is computed exactly as by the pointwise
    functions, so the series does not depend on the executor.

    Returns:
        EstimateSeries
    """
    _check_h(h)
    if with_regression and not sample.has_ys:
        raise ContractViolation("regression estimate needs y values")

    xs = sample.sorted_xs()
    ys = sample.sorted_ys() if with_regression else None

    def at(x):
        if with_regression:
            return _regression(xs, ys, x, h)
        return (_density(xs, x, h), None, None)

    executor = executor or Executors.sync()
    rows = f_sequence([executor.submit(at, float(x)) for x in grid.points]).result()

    kwargs = {}
    if with_regression:
        starved = [bool(r[2].starved) for r in rows]
        kwargs = dict(
            numerator=[r[1] for r in rows],
            regression=[r[2].value for r in rows],
            starved=starved,
        )
        if any(starved):
            LOG.warning(
                "%d of %d grid points have zero density estimate; "
                "regression set to 0 there",
                sum(starved),
                len(starved),
                extra={
                    "event": {
                        "type": "starved-points",
                        "count": sum(starved),
                        "points": [
                            float(x) for x, s in zip(grid.points, starved) if s
                        ],
                    }
                },
            )

    return EstimateSeries(
        grid=grid,
        density=[r[0] for r in rows],
        h=float(h),
        n=sample.n,
        **kwargs
    )


CURVES = ("density", "numerator", "regression")


def sup_error(series, reference, which="density"):
    """max over grid points of |estimate - reference(point)|.

    ``which`` selects the estimated curve: ``density`` (compare with f),
    ``numerator`` (compare with R·f) or ``regression`` (compare with R).
    """
    if which not in CURVES:
        raise ContractViolation(
            "unknown curve %r, expected one of %s" % (which, ", ".join(CURVES))
        )
    curve = getattr(series, which)
    if curve is None:
        raise ContractViolation("series has no %s curve" % which)
    truth = np.array([reference(float(x)) for x in series.grid.points], dtype=float)
    return float(np.max(np.abs(curve - truth)))
