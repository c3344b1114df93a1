import logging

import attr

from ..errors import ConfigError, VerificationFailed
from ..harness import load_config, load_preset, preset_names, run_experiment
from ..harness.report import dump_report
from ..services import ExecutorService
from ..task import GammaTask
from .common import OutputPaths, atomic_output

step = GammaTask.step

LOG = logging.getLogger("gammakernel")


class Verify(ExecutorService, OutputPaths, GammaTask):
    """Run a Monte Carlo verification experiment and write its report.

    The experiment is read from a YAML file or selected among the shipped
    presets. The report is always written; the command exits with status 1
    if any of the experiment's checks failed.
    """

    def add_args(self):
        super(Verify, self).add_args()

        source = self.parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--config", help="Experiment file (YAML)")
        source.add_argument(
            "--preset",
            help="Name of a shipped experiment: %s" % ", ".join(preset_names()),
        )
        self.parser.add_argument(
            "--seed", type=int, help="Override the experiment's random seed"
        )
        self.parser.add_argument(
            "--replications",
            type=int,
            help="Override the experiment's number of replications",
        )
        self.add_output_args(self.parser, "Output file for the report (YAML)")

    @step("Load experiment")
    def load(self):
        if self.args.preset:
            config = load_preset(self.args.preset)
        else:
            config = load_config(self.args.config)

        overrides = {}
        if self.args.seed is not None:
            if not 0 <= self.args.seed < 2**64:
                raise ConfigError("--seed must be an unsigned 64-bit integer")
            overrides["seed"] = self.args.seed
        if self.args.replications is not None:
            if self.args.replications < 2:
                raise ConfigError("--replications must be >= 2")
            overrides["replications"] = self.args.replications
        if overrides:
            config = attr.evolve(config, **overrides)

        LOG.info(
            "Experiment %s: %s, sizes %s, %d replications, seed %d",
            config.name,
            config.experiment,
            ", ".join(str(n) for n in config.sizes),
            config.replications,
            config.seed,
        )
        return config

    @step("Run experiment")
    def run_experiment(self, config):
        return run_experiment(config, executor=self.executor)

    @step("Write report")
    def write(self, report):
        with atomic_output(self.args.out) as f:
            dump_report(report, f, timing=self.args.timing)
        LOG.info("Wrote report to %s", self.args.out)

    def run(self):
        config = self.load()
        report = self.run_experiment(config)
        LOG.debug(
            "Experiment took %.3fs",
            report.runtime,
            extra={"event": {"type": "experiment-timing", "seconds": report.runtime}},
        )
        self.write(report)

        if not report.passed:
            raise VerificationFailed(report.failed_checks)
        LOG.info("All %d checks passed", len(report.checks))


def entry_point(cls=Verify):
    with cls() as instance:
        return instance.main()


def doc_parser():
    return Verify().parser
