import pytest
from sympy import Rational

from regsym.algebra.normalization import shear
from regsym.algebra.quantization import weyl_from_left
from regsym.errors import ZeroPolynomial
from regsym.models.options import Direction, EngineOptions, Quantization
from regsym.models.verdict import ConditionStatus, Decision, DecisionPath, SymbolClass
from regsym.parsers.fixture_parser import FixtureParser, bundled_fixtures_path
from regsym.parsers.symbol_parser import parse_symbol
from regsym.regularity.decide import analyze, decide, first_correction

FIXTURES = FixtureParser().parse_file(bundled_fixtures_path())


@pytest.mark.parametrize("fixture", FIXTURES, ids=[fixture.name for fixture in FIXTURES])
def test_bundled_fixtures(fixture):
    options = EngineOptions(quantization=fixture.quantization)
    verdict = decide(fixture.poly, options)
    assert verdict.decision is fixture.expected, verdict.diagnostics


@pytest.mark.parametrize("lam", [Rational(1), Rational(-2), Rational(1, 2)])
@pytest.mark.parametrize("text", ["xi^2 + x^2", "xi - x + i"])
def test_shear_invariance(text, lam):
    p = parse_symbol(text)
    assert decide(shear(p, lam)).decision is decide(p).decision is Decision.REGULAR


def test_theorem_path_records_branches():
    analysis = analyze(parse_symbol("xi - x + 1"))
    verdict = analysis.verdict
    assert verdict.decision is Decision.NOT_REGULAR
    assert verdict.path is DecisionPath.THEOREM_GENERAL
    assert verdict.classification.symbol_class is SymbolClass.GENERAL
    assert [branches.direction for branches in analysis.branch_sets] == [Direction.PLUS, Direction.MINUS]
    assert all(entry.status is ConditionStatus.FAILS for entry in verdict.condition.entries)
    assert verdict.exit_code == 1


def test_single_direction_is_inconclusive():
    options = EngineOptions(directions=(Direction.PLUS,))
    verdict = decide(parse_symbol("xi - x + i"), options)
    assert verdict.decision is Decision.INCONCLUSIVE
    assert "the theorem needs expansions in both directions" in verdict.diagnostics


def test_fast_path_skips_expansion():
    analysis = analyze(parse_symbol("xi^2 + x^2"))
    assert analysis.verdict.path is DecisionPath.GLOBALLY_ELLIPTIC
    assert analysis.branch_sets == ()
    assert analysis.normalized is None


def test_fast_path_cross_check_agrees():
    analysis = analyze(parse_symbol("xi^2 + x^2"), expand_fast_path=True)
    verdict = analysis.verdict
    assert verdict.decision is Decision.REGULAR
    assert len(analysis.branch_sets) == 2
    assert verdict.condition.holds
    assert not any("general path decides" in note for note in verdict.diagnostics)


def test_shear_is_recorded():
    verdict = decide(parse_symbol("x^2 - x*xi + xi"))
    assert verdict.shear == -1


def test_left_quantization_converts_first():
    p = parse_symbol("xi^2 + x*xi + x^2 - 1/2*i")
    left = decide(p, EngineOptions(quantization=Quantization.LEFT))
    assert left.decision is decide(weyl_from_left(p)).decision is Decision.REGULAR
    assert left.classification.symbol_class is SymbolClass.GLOBALLY_ELLIPTIC


@pytest.mark.parametrize("quantization", list(Quantization))
def test_zero_symbol_raises(quantization):
    with pytest.raises(ZeroPolynomial, match="the symbol is zero"):
        decide(parse_symbol("x*xi - xi*x"), EngineOptions(quantization=quantization))


def test_decision_is_deterministic():
    p = parse_symbol("xi^3 + i*x*xi^2 + x^2")
    assert decide(p) == decide(p)


def test_workers_give_the_same_verdict():
    p = parse_symbol("xi^4 - (2+i)*xi - x")
    assert decide(p, EngineOptions(workers=2)) == decide(p)


@pytest.mark.parametrize(("text", "slope", "correction"), [("xi - x + 1", 1.0, -1.0), ("xi - 2*x + i", 2.0, -1j)])
def test_first_correction(text, slope, correction):
    assert first_correction(parse_symbol(text), slope) == pytest.approx(correction)
