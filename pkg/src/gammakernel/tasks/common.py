import contextlib
import logging
import os
import tempfile

from ..harness.report import dump_yaml

LOG = logging.getLogger("gammakernel")


@contextlib.contextmanager
def atomic_output(path):
    """Yield a text stream whose content replaces ``path`` on success.

    Content goes to a temporary file in the destination directory, which
    is renamed over ``path`` only if the block completes. On any error the
    temporary file is removed and ``path`` is left untouched.
    """
    dirname = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(
        prefix=".%s." % os.path.basename(path), suffix=".tmp", dir=dirname
    )
    try:
        with os.fdopen(fd, "wt", encoding="utf-8", newline="\n") as f:
            yield f
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    LOG.debug("Wrote %s", path)


def write_yaml(path, data):
    with atomic_output(path) as f:
        dump_yaml(data, f)


class OutputPaths(object):
    """Shared argument handling for tasks writing result files."""

    def add_output_args(self, parser, help_text):
        parser.add_argument("--out", required=True, help=help_text)
        parser.add_argument(
            "--timing",
            action="store_true",
            help="Also record run time in the written summary or report",
        )

    def summary_path(self, path):
        """Sidecar path next to an output file: foo.csv -> foo.summary.yaml."""
        return os.path.splitext(path)[0] + ".summary.yaml"
