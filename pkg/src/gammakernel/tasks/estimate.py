import logging
import time

import pandas as pd

from ..arguments import KeyValue
from ..asymptotics import BandwidthSchedule, bandwidth
from ..errors import ConfigError, GammaKernelError
from ..estimators import EvaluationGrid, estimate_on_grid
from ..processes import ingest_csv
from ..services import ExecutorService
from ..task import GammaTask
from .common import OutputPaths, atomic_output, write_yaml

step = GammaTask.step

LOG = logging.getLogger("gammakernel")


class Estimate(ExecutorService, OutputPaths, GammaTask):
    """Estimate density and regression curves from a CSV sample.

    Reads the x column (and optionally a y column, already transformed)
    from the input file, evaluates the gamma-kernel estimators on a
    linear grid and writes the curves as CSV. A summary of the run is
    written next to the curves as YAML.
    """

    def add_args(self):
        super(Estimate, self).add_args()

        self.parser.add_argument("--input", required=True, help="Input CSV file")
        self.parser.add_argument(
            "--x-col", required=True, help="Name of the column holding x values"
        )
        self.parser.add_argument(
            "--y-col",
            help="Name of the column holding y values; enables regression output",
        )

        band = self.parser.add_mutually_exclusive_group(required=True)
        band.add_argument("--h", type=float, help="Fixed bandwidth")
        band.add_argument(
            "--schedule",
            action=KeyValue,
            keys={"c": float, "alpha": float},
            required_keys=("alpha",),
            help="Bandwidth schedule h = c * n^-alpha, e.g. c=1,alpha=0.45",
        )
        self.parser.add_argument(
            "--grid",
            action=KeyValue,
            keys={"a": float, "b": float, "count": int},
            required_keys=("a", "b", "count"),
            required=True,
            help="Evaluation grid, e.g. a=0.2,b=3,count=201",
        )
        self.add_output_args(self.parser, "Output CSV file for estimated curves")

    @property
    def grid(self):
        spec = self.args.grid
        if spec["count"] < 2:
            raise ConfigError("grid count must be >= 2")
        if not 0 <= spec["a"] < spec["b"]:
            raise ConfigError("grid needs 0 <= a < b")
        return EvaluationGrid.linspace(spec["a"], spec["b"], spec["count"])

    def bandwidth_for(self, n):
        if self.args.h is not None:
            if not self.args.h > 0:
                raise ConfigError("--h must be > 0")
            return self.args.h
        try:
            schedule = BandwidthSchedule(
                c=self.args.schedule.get("c", 1.0),
                alpha_exp=self.args.schedule["alpha"],
            )
        except GammaKernelError as ex:
            raise ConfigError(str(ex))
        return bandwidth(schedule, n)

    @step("Load sample")
    def load_sample(self):
        sample = ingest_csv(self.args.input, self.args.x_col, self.args.y_col)
        LOG.info("Loaded %d observations from %s", sample.n, self.args.input)
        return sample

    @step("Estimate curves")
    def estimate(self, sample, grid):
        h = self.bandwidth_for(sample.n)
        LOG.info("Estimating on %d grid points with h=%.6g", len(grid), h)
        return estimate_on_grid(
            sample,
            grid,
            h,
            with_regression=self.args.y_col is not None,
            executor=self.executor,
        )

    def curves_frame(self, series):
        columns = {"grid_x": series.grid.points, "density": series.density}
        if series.has_regression:
            columns["numerator"] = series.numerator
            columns["regression"] = series.regression
            columns["starved"] = [int(s) for s in series.starved]
        return pd.DataFrame(columns)

    def summary(self, series, runtime):
        out = {
            "input": self.args.input,
            "x_column": self.args.x_col,
            "n": series.n,
            "h": series.h,
            "grid": {
                "a": series.grid.a,
                "b": series.grid.b,
                "count": len(series.grid),
            },
        }
        if self.args.schedule:
            out["schedule"] = {
                "c": self.args.schedule.get("c", 1.0),
                "alpha": self.args.schedule["alpha"],
            }
        if series.has_regression:
            out["y_column"] = self.args.y_col
            out["starved_points"] = int(sum(series.starved))
        if self.args.timing:
            out["timing"] = {"seconds": round(runtime, 3)}
        return out

    @step("Write curves")
    def write(self, series, runtime):
        frame = self.curves_frame(series)
        with atomic_output(self.args.out) as f:
            frame.to_csv(f, index=False, float_format="%.17g", lineterminator="\n")

        summary_path = self.summary_path(self.args.out)
        write_yaml(summary_path, self.summary(series, runtime))
        LOG.info("Wrote %s and %s", self.args.out, summary_path)

    def run(self):
        start = time.monotonic()
        grid = self.grid
        sample = self.load_sample()
        series = self.estimate(sample, grid)
        runtime = time.monotonic() - start
        LOG.debug(
            "Estimated %d points in %.3fs",
            len(grid),
            runtime,
            extra={"event": {"type": "estimate-timing", "seconds": runtime}},
        )
        self.write(series, runtime)


def entry_point(cls=Estimate):
    with cls() as instance:
        return instance.main()


def doc_parser():
    return Estimate().parser
