#!/usr/bin/env python

import logging
import sys
import time
from pathlib import Path

import pandas as pd

from regsym.errors import RegsymError
from regsym.models.fixture import Fixture, FixtureResult
from regsym.models.options import EngineOptions
from regsym.parsers.fixture_parser import FixtureParser, bundled_fixtures_path
from regsym.regularity.decide import decide
from regsym.utils.arguments import (
    USAGE_EXIT_CODE,
    ArgumentParser,
    add_engine_arguments,
    configure_logging,
    options_from_args,
)

logger = logging.getLogger(__name__)

MISMATCH_EXIT_CODE = 1


def run_fixture(fixture: Fixture, options: EngineOptions | None = None) -> FixtureResult:
    """Decide one fixture, reading its symbol with the fixture's own quantization."""
    options = (options or EngineOptions()).model_copy(update={"quantization": fixture.quantization})
    start = time.perf_counter()
    verdict = decide(fixture.poly, options)
    result = FixtureResult(
        name=fixture.name,
        symbol=fixture.symbol,
        expected=fixture.expected,
        decision=verdict.decision,
        path=verdict.path,
        seconds=time.perf_counter() - start,
        diagnostics=verdict.diagnostics,
    )
    if not result.passed:
        logger.warning("%s: expected %s, got %s", fixture.name, fixture.expected.value, verdict.decision.value)
    return result


def run_fixtures(path: str | Path | None = None, options: EngineOptions | None = None) -> list[FixtureResult]:
    """
    Decide every fixture of a fixture file.

    Parameters
    ----------
    path : str | Path | None
        Fixture file; the bundled corpus when omitted.
    options : EngineOptions | None
        Engine options shared by all fixtures (the quantization comes from each fixture).
    """
    fixtures = FixtureParser().parse_file(path or bundled_fixtures_path())
    return [run_fixture(fixture, options) for fixture in fixtures]


def summary_table(results: list[FixtureResult]) -> pd.DataFrame:
    """Tabulate fixture results."""
    columns = ["name", "symbol", "expected", "decision", "path", "result", "seconds"]
    rows = [
        {
            "name": result.name,
            "symbol": result.symbol,
            "expected": result.expected.value,
            "decision": result.decision.value,
            "path": result.path.value if result.path else "",
            "result": "PASS" if result.passed else "FAIL",
            "seconds": round(result.seconds, 3),
        }
        for result in results
    ]
    return pd.DataFrame(rows, columns=columns)


def report_fixtures(path: str | Path | None, options: EngineOptions) -> int:
    """Print the fixture table and summary; return 0 when every fixture passed."""
    results = run_fixtures(path, options)
    table = summary_table(results)
    if not table.empty:
        print(table.to_string(index=False))
    failed = int((table["result"] == "FAIL").sum()) if not table.empty else 0
    print(f"{len(results)} run, {len(results) - failed} passed, {failed} failed")
    return MISMATCH_EXIT_CODE if failed else 0


def main() -> None:  # noqa: D103
    parser = ArgumentParser(description="Runs the decision pipeline on a fixture file and compares the decisions")
    parser.add_argument(
        "path",
        nargs="?",
        type=str,
        default=None,
        help="fixture file (JSON array of {name, symbol, quantization, expected, notes}); bundled corpus if omitted",
    )
    add_engine_arguments(parser)

    args = parser.parse_args()
    configure_logging(args.verbose)

    try:
        code = report_fixtures(args.path, options_from_args(args))
    except (RegsymError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        code = USAGE_EXIT_CODE
    sys.exit(code)


if __name__ == "__main__":
    main()
