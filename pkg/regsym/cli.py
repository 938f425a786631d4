#!/usr/bin/env python

import logging
import sys

from regsym.analyze_symbol import emit_analysis
from regsym.errors import RegsymError
from regsym.run_fixtures import report_fixtures
from regsym.selftest import add_selftest_arguments, report_selftest
from regsym.utils.arguments import (
    USAGE_EXIT_CODE,
    ArgumentParser,
    add_engine_arguments,
    configure_logging,
    options_from_args,
)

logger = logging.getLogger(__name__)


def build_parser() -> ArgumentParser:
    """The `regsym` parser with the analyze, fixtures and selftest subcommands."""
    parser = ArgumentParser(
        prog="regsym", description="Global regularity of ODE operators with polynomial coefficients"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="decide regularity of one symbol")
    analyze.add_argument("symbol", type=str, help='the symbol, e.g. "xi^2 + x^2" (multiplication written with *)')
    add_engine_arguments(analyze)
    analyze.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    analyze.add_argument("--oracle", action="store_true", help="cross-validate the verdict numerically")

    fixtures = subparsers.add_parser("fixtures", help="run a fixture file and compare the decisions")
    fixtures.add_argument("path", nargs="?", type=str, default=None, help="fixture file; the bundled corpus if omitted")
    add_engine_arguments(fixtures)

    selftest = subparsers.add_parser("selftest", help="run the exact property suites")
    add_selftest_arguments(selftest)
    return parser


def run(args: list[str]) -> int:
    """
    Run one `regsym` command and return its exit code.

    Parameters
    ----------
    args : list[str]
        Command-line arguments without the program name.

    Returns
    -------
    int
        For ``analyze``: 0 Regular, 1 NotRegular, 2 Inconclusive. For ``fixtures`` and ``selftest``: 0 when
        everything passes and 1 otherwise. Usage and engine errors give 3.
    """
    parser = build_parser()
    try:
        parsed = parser.parse_args(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_EXIT_CODE
    configure_logging(parsed.verbose)
    logger.debug("running %s", parsed.command)

    try:
        if parsed.command == "analyze":
            return emit_analysis(parsed.symbol, options_from_args(parsed, oracle=parsed.oracle), as_json=parsed.json)
        if parsed.command == "fixtures":
            return report_fixtures(parsed.path, options_from_args(parsed))
        if parsed.cases is not None and parsed.cases < 0:
            print("error: --cases must be nonnegative", file=sys.stderr)
            return USAGE_EXIT_CODE
        return report_selftest(parsed.seed, parsed.cases)
    except (RegsymError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_EXIT_CODE


def main() -> None:  # noqa: D103
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
