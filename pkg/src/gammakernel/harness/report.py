"""Experiment reports and their YAML form."""

import attr
import numpy as np
import yaml


@attr.s(frozen=True, slots=True)
class Check(object):
    """One pass/fail criterion evaluated on an experiment's results."""

    name = attr.ib(type=str)
    value = attr.ib()
    threshold = attr.ib(default=None)
    passed = attr.ib(type=bool, default=True)


@attr.s
class ExperimentReport(object):
    name = attr.ib(type=str)
    experiment = attr.ib(type=str)
    seed = attr.ib(type=int)
    config = attr.ib(type=dict)
    """Echo of the configuration the report was produced from."""

    sizes = attr.ib(type=list, factory=list)
    """Consistency experiments: one summary per sample size."""

    points = attr.ib(type=list, factory=list)
    """CLT and bias experiments: one summary per target point."""

    checks = attr.ib(type=list, factory=list)
    runtime = attr.ib(type=float, default=None)
    """Wall-clock seconds; only serialized on request."""

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failed_checks(self):
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self, timing=False):
        out = {
            "name": self.name,
            "experiment": self.experiment,
            "seed": self.seed,
            "config": self.config,
            "checks": [attr.asdict(c) for c in self.checks],
            "passed": self.passed,
        }
        if self.sizes:
            out["sizes"] = self.sizes
        if self.points:
            out["points"] = self.points
        if timing and self.runtime is not None:
            out["runtime"] = round(self.runtime, 3)
        return out


def report_dumper(*args, **kwargs):
    # A yaml.SafeDumper which also accepts numpy scalars and arrays.
    out = yaml.SafeDumper(*args, **kwargs)
    out.add_representer(np.float64, lambda d, v: d.represent_float(float(v)))
    out.add_representer(np.int64, lambda d, v: d.represent_int(int(v)))
    out.add_representer(np.bool_, lambda d, v: d.represent_bool(bool(v)))
    out.add_representer(np.ndarray, lambda d, v: d.represent_list(v.tolist()))
    return out


def dump_yaml(data, stream=None):
    """Serialize plain data with sorted keys, byte-stable across runs."""
    return yaml.dump(
        data,
        stream,
        Dumper=report_dumper,
        sort_keys=True,
        default_flow_style=False,
        allow_unicode=False,
    )


def dump_report(report, stream=None, timing=False):
    return dump_yaml(report.to_dict(timing=timing), stream)
