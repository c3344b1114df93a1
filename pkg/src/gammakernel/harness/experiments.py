"""Monte Carlo experiments checking the estimators against their theory.

Three families are supported:

- consistency: the sup-error over a grid shrinks as n grows;
- clt: standardized estimates at target points look standard normal;
- bias: the mean estimation error matches the leading bias term.

Replication i always draws from stream i of the configured seed, and
results are gathered in replication order, so a report depends only on
its configuration and never on the executor used.
"""

import logging
import math
import time

import numpy as np
from more_executors import Executors
from more_executors.futures import f_sequence

from .. import asymptotics
from ..errors import ContractViolation
from ..estimators import (
    density_estimate,
    estimate_on_grid,
    regression_estimate,
    sup_error,
)
from ..processes import SeededRng, generate
from .report import Check, ExperimentReport
from .stats import ks_distance, quantile

LOG = logging.getLogger("gammakernel")


def _sample(config, n, index):
    return generate(SeededRng(config.seed, stream=index), config.process, n)


def _gather(executor, fn, count):
    executor = executor or Executors.sync()
    return f_sequence([executor.submit(fn, i) for i in range(count)]).result()


def _warn_rates(config):
    if config.schedule is None:
        return
    conditions = asymptotics.bandwidth_conditions(config.schedule)
    boundaries = [x == 0 for x in config.target_points] or [False]
    for boundary in sorted(set(boundaries)):
        if not conditions.holds(config.experiment, boundary=boundary):
            LOG.warning(
                "%s: bandwidth exponent %g is outside the admissible range for %s%s",
                config.name,
                config.schedule.alpha_exp,
                config.experiment,
                " at x = 0" if boundary else "",
            )


def _new_report(config):
    return ExperimentReport(
        name=config.name,
        experiment=config.experiment,
        seed=config.seed,
        config=config.to_dict(),
    )


def run_consistency(config, executor=None):
    """Median and 90th percentile of the sup-error on the grid, per n."""
    if config.kind != "consistency":
        raise ContractViolation("%s is not a consistency experiment" % config.experiment)
    _warn_rates(config)

    model = config.process.truth()
    which = "regression" if config.regression else "density"
    reference = model.R if config.regression else model.f
    report = _new_report(config)

    medians = []
    q90s = []
    for n in config.sizes:
        h = config.bandwidth_for(n)

        def one(index, n=n, h=h):
            sample = _sample(config, n, index)
            series = estimate_on_grid(
                sample, config.grid, h, with_regression=config.regression
            )
            starved = sum(series.starved) if series.starved else 0
            return sup_error(series, reference, which=which), starved

        results = _gather(executor, one, config.replications)
        errors = [r[0] for r in results]
        medians.append(quantile(errors, 0.5))
        q90s.append(quantile(errors, 0.9))
        report.sizes.append(
            {
                "n": n,
                "h": h,
                "median_sup_error": medians[-1],
                "q90_sup_error": q90s[-1],
                "sup_errors": errors,
                "starved_points": int(sum(r[1] for r in results)),
            }
        )
        LOG.info(
            "%s: n=%d h=%.6g median sup-error %.6g",
            config.name,
            n,
            h,
            medians[-1],
            extra={
                "event": {
                    "type": "replication-progress",
                    "experiment": config.name,
                    "n": n,
                    "median_sup_error": medians[-1],
                }
            },
        )

    thresholds = config.thresholds
    if thresholds.require_monotone and len(medians) > 1:
        report.checks.append(
            Check(
                name="median-sup-error-decreasing",
                value=medians,
                passed=all(b < a for a, b in zip(medians, medians[1:])),
            )
        )
        report.checks.append(
            Check(
                name="q90-sup-error-non-increasing",
                value=q90s,
                passed=all(b <= a for a, b in zip(q90s, q90s[1:])),
            )
        )
    if thresholds.sup_error_final_max is not None:
        report.checks.append(
            Check(
                name="final-median-sup-error",
                value=medians[-1],
                threshold=thresholds.sup_error_final_max,
                passed=medians[-1] < thresholds.sup_error_final_max,
            )
        )
    return report


def _truth_at(config, model, x):
    if config.regression:
        return float(model.R(x))
    return float(model.f(x))


def _estimate_at(config, sample, x, h):
    if config.regression:
        return float(regression_estimate(sample, x, h))
    return density_estimate(sample, x, h)


def _estimates(config, n, h, executor):
    points = config.target_points

    def one(index):
        sample = _sample(config, n, index)
        return [_estimate_at(config, sample, x, h) for x in points]

    # rows: replications, columns: target points
    return np.array(_gather(executor, one, config.replications), dtype=float)


def _clt_variance(config, model, x):
    if config.variance_override is not None:
        return config.variance_override
    if config.regression:
        theory = asymptotics.regression_clt_variance(model, x)
    else:
        theory = asymptotics.density_clt_variance(model, x)
    return theory * config.variance_scale


def run_clt(config, executor=None):
    """Standardized residuals at each target point, for the largest n."""
    if config.kind != "clt":
        raise ContractViolation("%s is not a CLT experiment" % config.experiment)
    _warn_rates(config)

    model = config.process.truth()
    n = config.sizes[-1]
    h = config.bandwidth_for(n)
    estimates = _estimates(config, n, h, executor)
    thresholds = config.thresholds
    report = _new_report(config)

    for col, x in enumerate(config.target_points):
        boundary = x == 0
        truth = _truth_at(config, model, x)
        variance = _clt_variance(config, model, x)
        residuals = [
            asymptotics.standardize(est, truth, variance, n, h, boundary)
            for est in estimates[:, col]
        ]
        ks = ks_distance(residuals)
        mean = float(np.mean(residuals))
        var = float(np.var(residuals, ddof=1))

        summary = {
            "x": x,
            "n": n,
            "h": h,
            "truth": truth,
            "variance": variance,
            "boundary": boundary,
            "ks_distance": ks,
            "residual_mean": mean,
            "residual_variance": var,
            "residuals": residuals,
        }
        if not config.regression and config.process.is_iid:
            rate2 = n * h if boundary else n * math.sqrt(h)
            exact = asymptotics.exact_density_variance(model, x, h, n)
            summary["finite_sample_variance_ratio"] = exact * rate2 / variance
        report.points.append(summary)

        ks_max = thresholds.ks_max_boundary if boundary else thresholds.ks_max
        report.checks.extend(
            [
                Check(
                    name="ks-distance@%g" % x,
                    value=ks,
                    threshold=ks_max,
                    passed=ks < ks_max,
                ),
                Check(
                    name="residual-mean@%g" % x,
                    value=mean,
                    threshold=thresholds.mean_max,
                    passed=abs(mean) < thresholds.mean_max,
                ),
                Check(
                    name="residual-variance@%g" % x,
                    value=var,
                    threshold=[
                        1.0 - thresholds.variance_band,
                        1.0 + thresholds.variance_band,
                    ],
                    passed=abs(var - 1.0) <= thresholds.variance_band,
                ),
            ]
        )
        LOG.info(
            "%s: x=%g KS %.4f mean %.4f variance %.4f",
            config.name,
            x,
            ks,
            mean,
            var,
        )
    return report


def _theoretical_bias(config, model, x, h):
    if config.regression:
        return asymptotics.regression_bias(model, x, h)
    return asymptotics.density_bias(model, x, h)


def run_bias(config, executor=None):
    """Empirical against leading-order bias at each target point."""
    if config.kind != "bias":
        raise ContractViolation("%s is not a bias experiment" % config.experiment)

    model = config.process.truth()
    n = config.sizes[-1]
    h = config.bandwidth_for(n)
    estimates = _estimates(config, n, h, executor)
    report = _new_report(config)
    limit = config.thresholds.bias_se

    for col, x in enumerate(config.target_points):
        column = estimates[:, col]
        truth = _truth_at(config, model, x)
        empirical = float(np.mean(column)) - truth
        se = float(np.std(column, ddof=1)) / math.sqrt(column.size)
        theory = _theoretical_bias(config, model, x, h)

        summary = {
            "x": x,
            "n": n,
            "h": h,
            "truth": truth,
            "empirical_bias": empirical,
            "standard_error": se,
            "theoretical_bias": theory,
        }
        if not config.regression:
            summary["exact_bias"] = asymptotics.exact_density_bias(model, x, h)
        report.points.append(summary)

        gap = abs(empirical - theory)
        report.checks.append(
            Check(
                name="bias@%g" % x,
                value=gap,
                threshold=limit * se,
                passed=gap <= limit * se,
            )
        )
        LOG.info(
            "%s: x=%g empirical bias %.6g (se %.3g), leading term %.6g",
            config.name,
            x,
            empirical,
            se,
            theory,
        )
    return report


RUNNERS = {
    "consistency": run_consistency,
    "clt": run_clt,
    "bias": run_bias,
}


def run_experiment(config, executor=None):
    """Run ``config`` with the matching runner; the report records runtime."""
    start = time.monotonic()
    report = RUNNERS[config.kind](config, executor=executor)
    report.runtime = time.monotonic() - start
    for check in report.checks:
        LOG.info(
            "check %s: %s",
            check.name,
            "passed" if check.passed else "FAILED",
            extra={
                "event": {
                    "type": "check-result",
                    "experiment": config.name,
                    "check": check.name,
                    "passed": check.passed,
                }
            },
        )
    return report
