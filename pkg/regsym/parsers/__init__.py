from regsym.parsers.fixture_parser import FixtureParser, bundled_fixtures_path
from regsym.parsers.symbol_parser import SymbolParser, parse_symbol

__all__ = [
    "FixtureParser",
    "SymbolParser",
    "bundled_fixtures_path",
    "parse_symbol",
]
