import attr
import numpy as np

from ..errors import DomainError

MAX_U64 = 2**64 - 1


def _u64(name):
    def check(_instance, _attribute, value):
        if not 0 <= value <= MAX_U64:
            raise DomainError("%s must be an unsigned 64-bit integer, got %r" % (name, value))

    return check


@attr.s
class SeededRng(object):
    """A reproducible random stream identified by (seed, stream).

    Streams of one seed are independent; replication i of an experiment
    uses stream i. The bit generator is counter-based (Philox), so the
    sequence is the same on every platform.
    """

    seed = attr.ib(type=int, converter=int, validator=_u64("seed"))
    stream = attr.ib(type=int, default=0, converter=int, validator=_u64("stream"))
    generator = attr.ib(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        self.generator = np.random.Generator(np.random.Philox(sequence))


def sample_gamma(rng, shape, scale, size=None):
    """Gamma(shape, scale) variate(s), drawn by exact rejection sampling."""
    if not (shape > 0 and scale > 0):
        raise DomainError("gamma needs shape, scale > 0, got %r, %r" % (shape, scale))
    out = rng.generator.gamma(shape, scale, size=size)
    if size is None:
        return float(out)
    return out
