#!/usr/bin/env python

import sys
import time

from regsym.errors import RegsymError
from regsym.models.options import EngineOptions
from regsym.models.report import AnalysisReport
from regsym.oracle.cross_validate import cross_validate
from regsym.parsers.symbol_parser import parse_symbol
from regsym.regularity.decide import analyze
from regsym.utils.arguments import (
    USAGE_EXIT_CODE,
    ArgumentParser,
    add_engine_arguments,
    configure_logging,
    options_from_args,
)
from regsym.utils.formatting import render_report


def analyze_symbol(text: str, options: EngineOptions | None = None) -> AnalysisReport:
    """
    Parse a symbol, run the decision pipeline and collect the report.

    Parameters
    ----------
    text : str
        Symbol in the input grammar, e.g. ``"xi^2 + x^2"``.
    options : EngineOptions | None
        Engine options; `options.oracle` adds the numerical cross-validation.
    """
    options = options or EngineOptions()
    start = time.perf_counter()
    p = parse_symbol(text)
    analysis = analyze(p, options)
    oracle = cross_validate(p, analysis.verdict, options, analysis) if options.oracle else None
    return AnalysisReport(
        input=text,
        quantization=options.quantization,
        directions=options.directions,
        depth=options.depth,
        weyl_symbol=analysis.symbol,
        normalized=analysis.normalized,
        shear=analysis.shear,
        classification=analysis.classification,
        branches=analysis.branch_sets,
        verdict=analysis.verdict,
        tolerances=options.tolerances,
        oracle=oracle,
        seconds=time.perf_counter() - start,
    )


def emit_analysis(text: str, options: EngineOptions, as_json: bool = False) -> int:
    """Print the report of one symbol and return the exit code of its decision."""
    report = analyze_symbol(text, options)
    print(report.to_json() if as_json else render_report(report))
    return report.verdict.exit_code


def main() -> None:  # noqa: D103
    parser = ArgumentParser(description="Decides global regularity of the operator with the given symbol")
    parser.add_argument("symbol", type=str, help='the symbol, e.g. "xi^2 + x^2" (multiplication written with *)')
    add_engine_arguments(parser)
    parser.add_argument("--json", action="store_true", help="print the JSON report instead of text")
    parser.add_argument("--oracle", action="store_true", help="cross-validate the verdict numerically")

    args = parser.parse_args()
    configure_logging(args.verbose)

    try:
        code = emit_analysis(args.symbol, options_from_args(args, oracle=args.oracle), as_json=args.json)
    except (RegsymError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        code = USAGE_EXIT_CODE
    sys.exit(code)


if __name__ == "__main__":
    main()
