import pytest
from sympy import Rational

from regsym.models.branches import PuiseuxSeries, SeriesTerm
from regsym.models.options import Direction
from regsym.models.verdict import ConditionStatus
from regsym.parsers.symbol_parser import parse_symbol
from regsym.puiseux.expansion import expand_branches
from regsym.regularity.condition import branch_condition, check_condition, imaginary_witness


def branch(*terms):
    return PuiseuxSeries(
        direction=Direction.PLUS,
        terms=tuple(SeriesTerm(exponent=Rational(e), coefficient=c) for e, c in terms),
        truncation_exponent=Rational(-9, 4),
    )


@pytest.mark.parametrize(
    ("terms", "status", "exponent"),
    [
        ([(1, 1), (0, 2j)], ConditionStatus.HOLDS, Rational(0)),
        ([(1, 1j)], ConditionStatus.HOLDS, Rational(1)),
        ([(1, 1), ("-1/2", 0.5 + 0.25j)], ConditionStatus.HOLDS, Rational(-1, 2)),
        ([(1, 1), (-1, 3j)], ConditionStatus.BOUNDARY, Rational(-1)),
        ([(1, 1), (-2, 1j)], ConditionStatus.FAILS, Rational(-2)),
    ],
)
def test_branch_condition(terms, status, exponent):
    condition = branch_condition(branch(*terms), 0, Direction.PLUS, 1e-8)
    assert condition.status is status
    assert condition.witness_exponent == exponent


def test_real_branch_fails_without_witness():
    condition = branch_condition(branch((1, 1), ("-1/2", 0.5)), 3, Direction.MINUS, 1e-8)
    assert condition.status is ConditionStatus.FAILS
    assert condition.witness_exponent is None
    assert (condition.branch, condition.direction) == (3, Direction.MINUS)


def test_tiny_imaginary_parts_are_ignored():
    assert imaginary_witness(branch((1, 1 + 1e-12j), (0, 2j)), 1e-8) == (Rational(0), 2j)


def test_condition_report(tolerances):
    p = parse_symbol("xi^2 + x^2")
    report = check_condition([expand_branches(p, direction) for direction in Direction], tolerances)
    assert len(report.entries) == 4
    assert report.holds
    assert report.boundary == ()


def test_real_branch_fails_the_condition(tolerances):
    p = parse_symbol("xi - x")
    report = check_condition([expand_branches(p, Direction.PLUS)], tolerances)
    assert not report.holds
    assert report.entries[0].status is ConditionStatus.FAILS
