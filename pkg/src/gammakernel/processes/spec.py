import attr

from .. import models
from ..errors import DomainError

PROCESS_KINDS = ("iid_exponential", "iid_gamma", "ear1", "regression_over")

EAR1_BURN_IN = 1000


@attr.s(frozen=True)
class ProcessSpec(object):
    """Description of a data-generating process.

    Only the parameters of the chosen ``kind`` are used:

    - ``iid_exponential``: ``rate``
    - ``iid_gamma``: ``shape``, ``scale``
    - ``ear1``: ``rho``, ``rate``, ``burn_in``
    - ``regression_over``: ``base`` (another spec, not itself a
      regression), ``regfn``, ``noise_var`` and, for the constant
      function, ``constant``
    """

    kind = attr.ib(type=str)
    rate = attr.ib(type=float, default=1.0, converter=float)
    shape = attr.ib(type=float, default=1.0, converter=float)
    scale = attr.ib(type=float, default=1.0, converter=float)
    rho = attr.ib(type=float, default=0.0, converter=float)
    burn_in = attr.ib(type=int, default=EAR1_BURN_IN, converter=int)
    base = attr.ib(default=None)
    regfn = attr.ib(type=str, default=None)
    noise_var = attr.ib(type=float, default=0.0, converter=float)
    constant = attr.ib(type=float, default=1.0, converter=float)

    def __attrs_post_init__(self):
        if self.kind not in PROCESS_KINDS:
            raise DomainError(
                "unknown process kind %r, expected one of %s"
                % (self.kind, ", ".join(PROCESS_KINDS))
            )
        if not self.rate > 0:
            raise DomainError("rate must be > 0, got %r" % (self.rate,))
        if not (self.shape > 0 and self.scale > 0):
            raise DomainError(
                "shape and scale must be > 0, got %r, %r" % (self.shape, self.scale)
            )
        if not 0 <= self.rho < 1:
            raise DomainError("rho must lie in [0, 1), got %r" % (self.rho,))
        if self.burn_in < 0:
            raise DomainError("burn-in must be >= 0, got %r" % (self.burn_in,))

        if self.kind == "regression_over":
            if self.base is None or self.base.kind == "regression_over":
                raise DomainError("regression needs a non-regression base process")
            if not self.noise_var >= 0:
                raise DomainError(
                    "noise variance must be >= 0, got %r" % (self.noise_var,)
                )
            # Resolves the name, raising on unknown ones.
            self.regression_function()

    @property
    def is_iid(self):
        return self.kind.startswith("iid_")

    @property
    def is_regression(self):
        return self.kind == "regression_over"

    @property
    def marginal(self):
        """The spec generating the X values."""
        return self.base if self.is_regression else self

    def regression_function(self):
        return models.regression_function(self.regfn, c=self.constant)

    def truth(self):
        """CurveModel with the true f (and R, σ² for regression specs)."""
        if self.kind == "regression_over":
            return models.with_regression(
                self.base.truth(), self.regression_function(), self.noise_var
            )
        if self.kind == "iid_gamma":
            return models.gamma(self.shape, self.scale)
        # EAR(1) has an exactly exponential stationary marginal.
        return models.exponential(self.rate)

    def describe(self):
        """Plain dict of the parameters in use, for reports and headers."""
        if self.kind == "iid_exponential":
            out = {"rate": self.rate}
        elif self.kind == "iid_gamma":
            out = {"shape": self.shape, "scale": self.scale}
        elif self.kind == "ear1":
            out = {"rho": self.rho, "rate": self.rate, "burn_in": self.burn_in}
        else:
            out = {
                "base": self.base.describe(),
                "regfn": self.regfn,
                "noise_var": self.noise_var,
            }
            if self.regfn == "constant":
                out["constant"] = self.constant
        out["kind"] = self.kind
        return out
