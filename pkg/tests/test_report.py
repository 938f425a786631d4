import json
import re

from regsym.analyze_symbol import analyze_symbol
from regsym.models.report import SCHEMA_ID, AnalysisReport
from regsym.models.types import format_float
from regsym.models.verdict import Decision
from regsym.parsers.fixture_parser import bundled_fixtures_path

SCHEMA = json.loads((bundled_fixtures_path().parent.parent / "schema" / "report.schema.json").read_text())
RATIONAL = re.compile(r"^-?\d+/\d+$")


def test_report_has_every_required_key():
    data = json.loads(analyze_symbol("xi - x + 1").to_json())
    assert data["schema"] == SCHEMA_ID
    assert set(SCHEMA["required"]) <= set(data)


def test_exact_values_are_strings():
    data = json.loads(analyze_symbol("xi^4 - (2+i)*xi - x").to_json())
    assert RATIONAL.match(data["depth"])
    assert data["depth"] == "-9/4"
    assert data["shear"] == "0/1"
    assert isinstance(data["seconds"], str)
    assert data["tolerances"]["precision"] == format_float(1e-12)
    term = data["branches"][0]["branches"][0]["terms"][0]
    assert RATIONAL.match(term["exponent"])
    assert set(term["coefficient"]) == {"re", "im"}
    assert all(isinstance(value, str) for value in term["coefficient"].values())


def test_exact_roots_serialize_minus_infinity():
    data = json.loads(analyze_symbol("xi - x + 1").to_json())
    certificate = data["branches"][0]["residual_certificates"][0]
    assert certificate["slope"] == "-inf"
    assert certificate["passed"] is True


def test_report_validates_back():
    report = analyze_symbol("xi^3 + i*x*xi^2 + x^2")
    restored = AnalysisReport.model_validate_json(report.to_json())
    assert restored.verdict.decision is Decision.REGULAR
    assert restored.weyl_symbol == report.weyl_symbol
    assert restored.depth == report.depth
    assert len(restored.branches) == 2


def test_fast_path_report_has_no_branches():
    data = json.loads(analyze_symbol("xi^2 + x^2").to_json())
    assert data["branches"] == []
    assert data["normalized"] is None
    assert data["verdict"]["path"] == "GloballyElliptic"
    assert data["classification"]["symbol_class"] == "GloballyElliptic"
