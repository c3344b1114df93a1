"""Experiment configuration: YAML files checked against a JSON schema."""

import logging
import os

import attr
import jsonschema
import yaml

from ..asymptotics import BandwidthSchedule, bandwidth
from ..errors import ConfigError, GammaKernelError
from ..estimators import EvaluationGrid
from ..processes import ProcessSpec

LOG = logging.getLogger("gammakernel")

PRESET_DIR = os.path.join(os.path.dirname(__file__), "presets")

EXPERIMENTS = (
    "consistency_density",
    "consistency_regression",
    "clt_density",
    "clt_regression",
    "bias_density",
    "bias_regression",
)

_NUMBER = {"type": "number"}
_POSITIVE = {"type": "number", "exclusiveMinimum": 0}

_MARGINAL_PROCESS = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["iid_exponential", "iid_gamma", "ear1"]},
        "rate": _POSITIVE,
        "shape": _POSITIVE,
        "scale": _POSITIVE,
        "rho": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
        "burn_in": {"type": "integer", "minimum": 0},
    },
    "required": ["kind"],
    "additionalProperties": False,
}

SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "gammakernel experiment",
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "description": {"type": "string"},
        "experiment": {"enum": list(EXPERIMENTS)},
        "process": {
            "oneOf": [
                _MARGINAL_PROCESS,
                {
                    "type": "object",
                    "properties": {
                        "kind": {"const": "regression_over"},
                        "base": _MARGINAL_PROCESS,
                        "regfn": {"enum": ["rational", "linear_sat", "constant"]},
                        "noise_var": {"type": "number", "minimum": 0},
                        "constant": _NUMBER,
                    },
                    "required": ["kind", "base", "regfn"],
                    "additionalProperties": False,
                },
            ]
        },
        "bandwidth": {
            "oneOf": [
                {
                    "type": "object",
                    "properties": {
                        "schedule": {
                            "type": "object",
                            "properties": {
                                "c": _POSITIVE,
                                "alpha": {
                                    "type": "number",
                                    "exclusiveMinimum": 0,
                                    "exclusiveMaximum": 1,
                                },
                            },
                            "required": ["alpha"],
                            "additionalProperties": False,
                        }
                    },
                    "required": ["schedule"],
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "properties": {"h": _POSITIVE},
                    "required": ["h"],
                    "additionalProperties": False,
                },
            ]
        },
        "grid": {
            "type": "object",
            "properties": {
                "a": {"type": "number", "minimum": 0},
                "b": {"type": "number", "minimum": 0},
                "count": {"type": "integer", "minimum": 1},
            },
            "required": ["a", "b", "count"],
            "additionalProperties": False,
        },
        "sizes": {
            "type": "array",
            "items": {"type": "integer", "minimum": 1},
            "minItems": 1,
        },
        "replications": {"type": "integer", "minimum": 2},
        "seed": {"type": "integer", "minimum": 0, "maximum": 2**64 - 1},
        "target_points": {
            "type": "array",
            "items": {"type": "number", "minimum": 0},
        },
        "thresholds": {
            "type": "object",
            "properties": {
                "ks_max": _POSITIVE,
                "ks_max_boundary": _POSITIVE,
                "mean_max": _POSITIVE,
                "variance_band": _POSITIVE,
                "bias_se": _POSITIVE,
                "sup_error_final_max": _POSITIVE,
                "require_monotone": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "variance_scale": _POSITIVE,
        "variance_override": _POSITIVE,
    },
    "required": ["experiment", "process", "bandwidth", "sizes", "replications", "seed"],
    "additionalProperties": False,
}


@attr.s(frozen=True, slots=True)
class Thresholds(object):
    """Pass/fail limits applied to experiment results."""

    ks_max = attr.ib(type=float, default=0.07)
    """Largest KS distance to N(0, 1) of standardized residuals, x > 0."""

    ks_max_boundary = attr.ib(type=float, default=0.08)
    """Same, at x = 0."""

    mean_max = attr.ib(type=float, default=0.1)
    """Largest |mean| of standardized residuals."""

    variance_band = attr.ib(type=float, default=0.15)
    """Allowed relative deviation of the residual variance from 1."""

    bias_se = attr.ib(type=float, default=3.0)
    """Allowed distance, in Monte Carlo standard errors, between the
    empirical and the theoretical bias."""

    sup_error_final_max = attr.ib(type=float, default=None)
    """Upper limit on the median sup-error at the largest sample size."""

    require_monotone = attr.ib(type=bool, default=True)
    """Whether median sup-errors must strictly decrease along sizes."""


@attr.s(frozen=True)
class ExperimentConfig(object):
    name = attr.ib(type=str)
    experiment = attr.ib(type=str)
    process = attr.ib()
    sizes = attr.ib(converter=tuple)
    replications = attr.ib(type=int)
    seed = attr.ib(type=int)
    schedule = attr.ib(default=None)
    h = attr.ib(type=float, default=None)
    grid = attr.ib(default=None)
    target_points = attr.ib(default=(), converter=tuple)
    thresholds = attr.ib(default=attr.Factory(Thresholds))
    variance_scale = attr.ib(type=float, default=1.0)
    variance_override = attr.ib(type=float, default=None)
    description = attr.ib(type=str, default="")

    def __attrs_post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError("unknown experiment %r" % (self.experiment,))
        if (self.schedule is None) == (self.h is None):
            raise ConfigError("exactly one of a bandwidth schedule or h is needed")
        if not self.sizes or any(
            b <= a for a, b in zip(self.sizes, self.sizes[1:])
        ):
            raise ConfigError("sizes must be strictly increasing: %r" % (self.sizes,))
        if self.replications < 2:
            raise ConfigError("replications must be >= 2")
        if self.kind == "consistency" and self.grid is None:
            raise ConfigError("%s needs a grid" % self.experiment)
        if self.kind != "consistency" and not self.target_points:
            raise ConfigError("%s needs target_points" % self.experiment)
        if any(x < 0 for x in self.target_points):
            raise ConfigError("target points must be >= 0")
        if self.regression and not self.process.is_regression:
            raise ConfigError(
                "%s needs a regression_over process" % self.experiment
            )

    @property
    def kind(self):
        """consistency, clt or bias."""
        return self.experiment.split("_", 1)[0]

    @property
    def regression(self):
        return self.experiment.endswith("_regression")

    def bandwidth_for(self, n):
        if self.schedule is not None:
            return bandwidth(self.schedule, n)
        return self.h

    def to_dict(self):
        """Plain-data echo of the configuration, as written in reports."""
        out = {
            "name": self.name,
            "experiment": self.experiment,
            "process": self.process.describe(),
            "sizes": list(self.sizes),
            "replications": self.replications,
            "seed": self.seed,
            "thresholds": {
                k: v for k, v in attr.asdict(self.thresholds).items() if v is not None
            },
            "variance_scale": self.variance_scale,
        }
        if self.schedule is not None:
            out["bandwidth"] = {
                "schedule": {"c": self.schedule.c, "alpha": self.schedule.alpha_exp}
            }
        else:
            out["bandwidth"] = {"h": self.h}
        if self.grid is not None:
            out["grid"] = {
                "a": self.grid.a,
                "b": self.grid.b,
                "count": len(self.grid),
            }
        if self.target_points:
            out["target_points"] = list(self.target_points)
        if self.variance_override is not None:
            out["variance_override"] = self.variance_override
        return out


def _process(data):
    data = dict(data)
    if "base" in data:
        data["base"] = _process(data["base"])
    return ProcessSpec(**data)


def config_from_dict(data, name="experiment"):
    """Validate ``data`` against SCHEMA and build an ExperimentConfig.

    Raises:
        ConfigError: schema violation or inconsistent settings.
    """
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as ex:
        where = "/".join(str(p) for p in ex.absolute_path) or "<top>"
        raise ConfigError("%s: invalid config at %s: %s" % (name, where, ex.message))

    band = data["bandwidth"]
    try:
        schedule = None
        if "schedule" in band:
            schedule = BandwidthSchedule(
                c=band["schedule"].get("c", 1.0),
                alpha_exp=band["schedule"]["alpha"],
            )

        grid = None
        if "grid" in data:
            g = data["grid"]
            grid = EvaluationGrid.linspace(g["a"], g["b"], g["count"])

        return ExperimentConfig(
            name=data.get("name", name),
            description=data.get("description", ""),
            experiment=data["experiment"],
            process=_process(data["process"]),
            sizes=data["sizes"],
            replications=data["replications"],
            seed=data["seed"],
            schedule=schedule,
            h=band.get("h"),
            grid=grid,
            target_points=data.get("target_points", ()),
            thresholds=Thresholds(**data.get("thresholds", {})),
            variance_scale=data.get("variance_scale", 1.0),
            variance_override=data.get("variance_override"),
        )
    except ConfigError:
        raise
    except GammaKernelError as ex:
        raise ConfigError("%s: %s" % (name, ex))


def load_config(path):
    """Load an experiment from a YAML file."""
    # Missing or unreadable files propagate as OSError.
    with open(path, "rt", encoding="utf-8") as f:
        try:
            data = yaml.load(f, Loader=yaml.SafeLoader)
        except yaml.YAMLError as ex:
            raise ConfigError("%s: not valid YAML: %s" % (path, ex))
    if not isinstance(data, dict):
        raise ConfigError("%s: expected a mapping at top level" % path)
    name = os.path.splitext(os.path.basename(path))[0]
    return config_from_dict(data, name=name)


def preset_names():
    return sorted(
        os.path.splitext(f)[0]
        for f in os.listdir(PRESET_DIR)
        if f.endswith(".yaml")
    )


def load_preset(name):
    """Load one of the experiments shipped with gammakernel."""
    if name not in preset_names():
        raise ConfigError(
            "unknown preset %r, expected one of: %s" % (name, ", ".join(preset_names()))
        )
    return load_config(os.path.join(PRESET_DIR, name + ".yaml"))
