import pytest

from regsym.analyze_symbol import analyze_symbol
from regsym.models.options import Direction
from regsym.parsers.symbol_parser import parse_symbol
from regsym.puiseux.expansion import expand_branches
from regsym.utils.formatting import branch_table, format_complex, render_report


@pytest.mark.parametrize(
    ("value", "text"),
    [(2 + 0j, "2"), (-1.5j, "-1.5i"), (0.5 + 0.25j, "0.5+0.25i"), (1 - 1j, "1-1i")],
)
def test_format_complex(value, text):
    assert format_complex(value) == text


def test_branch_table_rows():
    table = branch_table(expand_branches(parse_symbol("xi - x + 1"), Direction.PLUS))
    assert list(table["exponent"]) == ["1", "0"]
    assert list(table["coefficient"]) == ["1", "-1"]
    assert set(table["truncation"]) == {"exact"}


def test_render_fast_path():
    text = render_report(analyze_symbol("xi^2 + x^2"))
    assert "decision:       Regular via GloballyElliptic" in text
    assert "branches at" not in text
    assert "tolerances:" in text


def test_render_theorem_path():
    text = render_report(analyze_symbol("xi - x + 1"))
    assert "decision:       NotRegular via TheoremGeneral" in text
    assert "branches at plus" in text
    assert "branches at minus" in text
    assert "growth condition: fails" in text
    assert "plus branch 0: Fails (no imaginary term)" in text


def test_render_unseparated():
    text = render_report(analyze_symbol("(xi - x)^2"))
    assert "unseparated at depth: [[0, 1]]" in text
    assert "separation at plus: fails" in text
