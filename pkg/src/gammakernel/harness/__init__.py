"""Monte Carlo verification of the estimators' limit theorems."""

from .config import (
    ExperimentConfig,
    Thresholds,
    config_from_dict,
    load_config,
    load_preset,
    preset_names,
)
from .experiments import run_bias, run_clt, run_consistency, run_experiment
from .report import Check, ExperimentReport, dump_report
from .stats import ks_distance, ks_two_sample, lag1_autocorrelation

__all__ = [
    "ExperimentConfig",
    "Thresholds",
    "config_from_dict",
    "load_config",
    "load_preset",
    "preset_names",
    "run_bias",
    "run_clt",
    "run_consistency",
    "run_experiment",
    "Check",
    "ExperimentReport",
    "dump_report",
    "ks_distance",
    "ks_two_sample",
    "lag1_autocorrelation",
]
