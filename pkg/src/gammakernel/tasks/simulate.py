import logging

from ..errors import ConfigError, GammaKernelError
from ..processes import SeededRng, ProcessSpec, generate, write_csv
from ..processes.spec import EAR1_BURN_IN
from ..models import REGRESSION_FUNCTIONS
from ..task import GammaTask
from .common import OutputPaths, atomic_output

step = GammaTask.step

LOG = logging.getLogger("gammakernel")


class Simulate(OutputPaths, GammaTask):
    """Generate a sample from a known process and write it as CSV.

    The written file holds column x and, when a regression function is
    chosen, column y. Its first line is a comment recording the seed,
    stream and process, so any file can be regenerated exactly.
    """

    def add_args(self):
        super(Simulate, self).add_args()

        group = self.parser.add_argument_group("Process")
        group.add_argument(
            "--process",
            choices=["iid_exponential", "iid_gamma", "ear1"],
            default="iid_exponential",
            help="Process generating x values (default: iid_exponential)",
        )
        group.add_argument(
            "--lambda",
            dest="rate",
            type=float,
            default=1.0,
            help="Exponential rate for iid_exponential and ear1 (default: 1)",
        )
        group.add_argument(
            "--rho",
            type=float,
            default=0.0,
            help="EAR(1) autoregression coefficient in [0, 1) (default: 0)",
        )
        group.add_argument(
            "--burn-in",
            type=int,
            default=EAR1_BURN_IN,
            help="EAR(1) states discarded before output (default: %d)" % EAR1_BURN_IN,
        )
        group.add_argument(
            "--shape", type=float, default=1.0, help="Gamma shape for iid_gamma"
        )
        group.add_argument(
            "--scale", type=float, default=1.0, help="Gamma scale for iid_gamma"
        )

        group = self.parser.add_argument_group("Regression")
        group.add_argument(
            "--regression",
            choices=sorted(REGRESSION_FUNCTIONS),
            help="Also generate y = R(x) * noise with this regression function",
        )
        group.add_argument(
            "--noise-var",
            type=float,
            default=0.0,
            help="Variance of the multiplicative noise, mean 1 (default: 0)",
        )
        group.add_argument(
            "--constant",
            type=float,
            default=1.0,
            help="Value of the constant regression function (default: 1)",
        )

        self.parser.add_argument("--n", type=int, required=True, help="Sample size")
        self.parser.add_argument(
            "--seed", type=int, required=True, help="Random seed (unsigned 64-bit)"
        )
        self.parser.add_argument(
            "--stream",
            type=int,
            default=0,
            help="Random stream of the seed to draw from (default: 0)",
        )
        self.add_output_args(self.parser, "Output CSV file for the sample")

    @property
    def process(self):
        args = self.args
        try:
            spec = ProcessSpec(
                kind=args.process,
                rate=args.rate,
                rho=args.rho,
                burn_in=args.burn_in,
                shape=args.shape,
                scale=args.scale,
            )
            if args.regression:
                spec = ProcessSpec(
                    kind="regression_over",
                    base=spec,
                    regfn=args.regression,
                    noise_var=args.noise_var,
                    constant=args.constant,
                )
        except GammaKernelError as ex:
            raise ConfigError(str(ex))
        return spec

    def header(self, spec):
        params = ",".join(
            "%s=%s" % (k, v)
            for k, v in sorted(spec.describe().items())
            if not isinstance(v, dict)
        )
        out = "gammakernel simulate seed=%d stream=%d n=%d %s" % (
            self.args.seed,
            self.args.stream,
            self.args.n,
            params,
        )
        if spec.is_regression:
            base = ",".join(
                "%s=%s" % kv for kv in sorted(spec.base.describe().items())
            )
            out += " base:" + base
        return out

    @step("Generate sample")
    def generate(self, spec):
        if self.args.n < 1:
            raise ConfigError("--n must be >= 1, got %d" % self.args.n)
        try:
            rng = SeededRng(self.args.seed, stream=self.args.stream)
        except GammaKernelError as ex:
            raise ConfigError(str(ex))
        return generate(rng, spec, self.args.n)

    @step("Write sample")
    def write(self, spec, sample):
        with atomic_output(self.args.out) as f:
            write_csv(sample, f, comment=self.header(spec))
        LOG.info("Wrote %d rows to %s", sample.n, self.args.out)

    def run(self):
        spec = self.process
        sample = self.generate(spec)
        self.write(spec, sample)


def entry_point(cls=Simulate):
    with cls() as instance:
        return instance.main()


def doc_parser():
    return Simulate().parser
