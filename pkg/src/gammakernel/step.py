import functools
import logging

LOG = logging.getLogger("gammakernel")


class StepDecorator(object):
    """Implementation of GammaTask.step decorator. See that method for more info."""

    def __init__(self, name):
        self._name = name

    @property
    def human_name(self):
        return self._name

    @property
    def machine_name(self):
        return self._name.replace(" ", "-").lower()

    def log(self, level, state, outcome):
        LOG.log(
            level,
            "%s: %s",
            self.human_name,
            state,
            extra={"event": {"type": "%s-%s" % (self.machine_name, outcome)}},
        )

    def __call__(self, fn):
        @functools.wraps(fn)
        def new_fn(instance, *args, **kwargs):
            self.log(logging.INFO, "started", "start")

            try:
                ret = fn(instance, *args, **kwargs)
            except SystemExit as exc:
                if exc.code == 0:
                    self.log(logging.INFO, "finished", "end")
                else:
                    self.log(logging.ERROR, "failed", "error")
                raise
            except Exception:
                self.log(logging.ERROR, "failed", "error")
                raise

            self.log(logging.INFO, "finished", "end")
            return ret

        return new_fn
