import logging

# Setup logging for the package
logging.getLogger(__name__).addHandler(logging.NullHandler())

try:
    from ._version import __version__
except ImportError:
    __version__ = "unknown"

from regsym import algebra, factorization, models, oracle, parsers, puiseux, regularity, utils
from regsym.analyze_symbol import analyze_symbol
from regsym.cli import run
from regsym.parsers.symbol_parser import parse_symbol
from regsym.regularity.decide import analyze, decide
from regsym.run_fixtures import run_fixtures
from regsym.selftest import selftest

__all__ = [
    "algebra",
    "analyze",
    "analyze_symbol",
    "decide",
    "factorization",
    "models",
    "oracle",
    "parse_symbol",
    "parsers",
    "puiseux",
    "regularity",
    "run",
    "run_fixtures",
    "selftest",
    "utils",
]
