import logging
import threading

from more_executors import Executors

from .base import Service

LOG = logging.getLogger("gammakernel")


def positive_int(value):
    out = int(value)
    if out < 1:
        raise ValueError("must be >= 1")
    return out


class ExecutorService(Service):
    """A service providing the executor which runs replications and grid
    points in parallel.

    With ``--workers 1`` (the default) work runs synchronously in the
    calling thread. Results never depend on the number of workers.
    """

    group_title = "Execution"

    def __init__(self, *args, **kwargs):
        self.__lock = threading.Lock()
        self.__instance = None
        super(ExecutorService, self).__init__(*args, **kwargs)

    def add_service_args(self, parser):
        super(ExecutorService, self).add_service_args(parser)

        parser.add_argument(
            "--workers",
            help="Number of worker threads (default: 1)",
            type=positive_int,
            default=1,
        )

    @property
    def executor(self):
        """Executor used during the task, created on first use."""
        with self.__lock:
            if not self.__instance:
                workers = self._service_args.workers
                if workers == 1:
                    self.__instance = Executors.sync()
                else:
                    LOG.debug("Starting %d worker threads", workers)
                    self.__instance = Executors.thread_pool(
                        name="gammakernel-workers", max_workers=workers
                    )
        return self.__instance

    def __exit__(self, *exc_details):
        with self.__lock:
            if self.__instance:
                self.__instance.shutdown(wait=True)
                self.__instance = None
        from_super = getattr(super(ExecutorService, self), "__exit__", None)
        if from_super:
            from_super(*exc_details)
