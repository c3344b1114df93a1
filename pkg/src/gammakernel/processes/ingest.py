import logging

import numpy as np
import pandas as pd

from ..errors import ParseError
from ..estimators import Sample

LOG = logging.getLogger("gammakernel")


def _numeric_column(frame, column, path):
    if column not in frame.columns:
        raise ParseError(
            "no column %r (columns: %s)" % (column, ", ".join(frame.columns)),
            path=path,
        )
    raw = frame[column]
    values = pd.to_numeric(raw, errors="coerce")
    bad = values.isna() | ~np.isfinite(values.astype(float))
    if bad.any():
        idx = int(np.flatnonzero(bad.to_numpy())[0])
        text = raw.iloc[idx]
        raise ParseError(
            "%s value %r is not a finite number" % (column, text or ""),
            path=path,
            row=idx + 1,
        )
    return values.to_numpy(dtype=float)


def ingest_csv(path, x_column, y_column=None):
    """Read a Sample from a comma-separated file with a header row.

    Lines starting with ``#`` are ignored. Rows are counted from 1 at the
    first data row in error messages.

    Raises:
        ParseError: the file is missing, malformed or empty, a value is not
            a number, or an x value is negative.
    """
    columns = [x_column] if y_column is None else [x_column, y_column]
    try:
        frame = pd.read_csv(
            path,
            comment="#",
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
            skipinitialspace=True,
        )
    except FileNotFoundError:
        raise ParseError("no such file", path=path)
    except pd.errors.EmptyDataError:
        raise ParseError("empty sample (no header)", path=path)
    except (pd.errors.ParserError, UnicodeDecodeError) as ex:
        raise ParseError("malformed CSV: %s" % str(ex).strip(), path=path)

    if len(frame) == 0:
        raise ParseError("empty sample", path=path)

    xs = _numeric_column(frame, x_column, path)
    negative = np.flatnonzero(xs < 0)
    if negative.size:
        idx = int(negative[0])
        raise ParseError(
            "%s value %r is negative" % (x_column, float(xs[idx])),
            path=path,
            row=idx + 1,
        )

    ys = _numeric_column(frame, y_column, path) if y_column is not None else None

    LOG.debug("read %d rows of %s from %s", len(frame), "/".join(columns), path)
    return Sample(xs=xs, ys=ys)


def write_csv(sample, out, comment=None):
    """Write ``sample`` as CSV columns x[, y] to a text stream.

    ``comment``, if given, goes first as a ``#`` line. Floats are written
    with 17 significant digits so that they read back exactly.
    """
    if comment:
        for line in comment.splitlines():
            out.write("# %s\n" % line)
    columns = {"x": sample.xs}
    if sample.has_ys:
        columns["y"] = sample.ys
    pd.DataFrame(columns).to_csv(
        out, index=False, float_format="%.17g", lineterminator="\n"
    )
