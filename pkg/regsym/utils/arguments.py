"""Command-line arguments shared by the regsym scripts."""

import argparse
import logging
import re
import sys
from typing import Any, NoReturn

from sympy import Rational

from regsym.models.options import Direction, EngineOptions, Quantization, Tolerances
from regsym.models.types import coerce_rational

USAGE_EXIT_CODE = 3
NEGATIVE_NUMBER = re.compile(r"^-\d+(?:\.\d+|/\d+)?$|^-\.\d+$")

DIRECTION_CHOICES = {
    "plus": (Direction.PLUS,),
    "minus": (Direction.MINUS,),
    "both": (Direction.PLUS, Direction.MINUS),
}


TOLERANCE_FLAGS = (
    ("--im-tol", "im_tol", "imaginary parts at or below this count as zero (default 1e-8)"),
    ("--lambda-tol", "lambda_tol", "|Im lambda| at or below this makes a leading slope real (default 1e-8)"),
    ("--cluster-tol", "cluster_tol", "roots closer than this (relative) merge into a multiple root (default 1e-8)"),
    ("--zero-tol", "zero_tol", "coefficients below this fraction of their scale are dropped (default 1e-10)"),
    ("--residual-slack", "residual_slack", "slack on the analytic residual slope bound (default 0.2)"),
    ("--slope-cap", "slope_cap", "largest log-log slope read as polynomial growth (default 50)"),
)


class ArgumentParser(argparse.ArgumentParser):
    """`argparse.ArgumentParser` that exits with code 3 on usage errors and reads ``-5/2`` as a value."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        # negative rationals such as -9/4 are option values, not flags
        self._negative_number_matcher = NEGATIVE_NUMBER

    def error(self, message: str) -> NoReturn:
        """Print the usage and the error to standard error, then exit with the usage code."""
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT_CODE, f"{self.prog}: error: {message}\n")


def rational_argument(text: str) -> Rational:
    """Parse ``-9/4``-style rationals for argparse."""
    try:
        return coerce_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def add_engine_arguments(parser: argparse.ArgumentParser) -> None:
    """Add the options that configure the decision pipeline."""
    parser.add_argument(
        "--quantization",
        type=str,
        choices=[q.value for q in Quantization],
        default=Quantization.WEYL.value,
        help="read the symbol as a weyl symbol (default) or as a left (standard) symbol",
    )
    parser.add_argument(
        "--direction",
        type=str,
        choices=list(DIRECTION_CHOICES),
        default="both",
        help="expansion directions; the theorem needs both",
    )
    parser.add_argument(
        "--depth", type=rational_argument, default="-9/4", help="expansion depth as a rational <= -1 (default -9/4)"
    )
    parser.add_argument(
        "--precision",
        type=float,
        default=None,
        help="relative residual for certified roots (default 1e-12, or REGSYM_PRECISION)",
    )
    for flag, field, help_text in TOLERANCE_FLAGS:
        parser.add_argument(flag, dest=field, type=float, default=None, help=help_text)
    parser.add_argument("--workers", type=int, default=1, help="expand both directions on this many threads")
    parser.add_argument("--verbose", action="store_true", help="log debug messages to standard error")


def options_from_args(args: argparse.Namespace, oracle: bool = False) -> EngineOptions:
    """Build engine options from parsed arguments."""
    fields = ["precision", *(field for _, field, _ in TOLERANCE_FLAGS)]
    overrides = {field: getattr(args, field) for field in fields if getattr(args, field) is not None}
    return EngineOptions(
        quantization=Quantization(args.quantization),
        directions=DIRECTION_CHOICES[args.direction],
        depth=args.depth,
        tolerances=Tolerances.from_env(**overrides),
        workers=args.workers,
        oracle=oracle,
    )


def configure_logging(verbose: bool) -> None:
    """Send log records to standard error, at DEBUG with --verbose and WARNING otherwise."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
