"""Entry point dispatching ``gammakernel <command> ...`` to a task."""

import sys
from argparse import REMAINDER, ArgumentParser

from .tasks import estimate, simulate, verify

COMMANDS = {
    "estimate": estimate.entry_point,
    "simulate": simulate.entry_point,
    "verify": verify.entry_point,
}


def main():
    parser = ArgumentParser(
        prog="gammakernel",
        description="Gamma-kernel density and regression estimation.",
        allow_abbrev=False,
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("args", nargs=REMAINDER)
    parsed = parser.parse_args()

    # Tasks parse sys.argv themselves.
    sys.argv[:] = ["gammakernel-%s" % parsed.command] + parsed.args
    return COMMANDS[parsed.command]()
