import cmath

import pytest
from sympy import Rational

from regsym.algebra.normalization import normalize_leading
from regsym.errors import NotAPolynomialInXi
from regsym.models.options import Direction
from regsym.parsers.symbol_parser import parse_symbol
from regsym.puiseux.expansion import expand_branches

EIGHTH = cmath.exp(1j * cmath.pi / 4)


def leading_terms(branches):
    return sorted(
        ((float(b.terms[0].exponent), b.terms[0].coefficient) for b in branches.branches),
        key=lambda item: (item[0], round(item[1].real, 6), round(item[1].imag, 6)),
    )


def test_harmonic_oscillator_roots_are_exact():
    branches = expand_branches(parse_symbol("xi^2 + x^2"), Direction.PLUS)
    assert len(branches.branches) == 2
    assert sorted(b.slope.imag for b in branches.branches) == [-1.0, 1.0]
    assert all(b.is_terminating and b.exact for b in branches.branches)
    assert all(len(b.terms) == 1 for b in branches.branches)
    assert branches.certified


def test_linear_shift_is_a_single_terminating_branch():
    branches = expand_branches(parse_symbol("xi - x + 1"), Direction.PLUS)
    (branch,) = branches.branches
    assert branch.is_terminating
    assert [(t.exponent, t.coefficient) for t in branch.terms] == [(1, 1), (0, -1)]


def test_minus_direction_expands_the_reflected_symbol():
    branches = expand_branches(parse_symbol("xi - x + 1"), Direction.MINUS)
    (branch,) = branches.branches
    assert branch.direction is Direction.MINUS
    assert [(t.exponent, t.coefficient) for t in branch.terms] == [(1, -1), (0, -1)]


# leading term e x^(1/4) with e^4 = 1 carries A / (4 e^2) x^(-1/2): +A/4 on both real branches
@pytest.mark.parametrize(("lead", "correction"), [(1, 0.5), (-1, 0.5), (1j, -0.5), (-1j, -0.5)])
def test_quartic_first_correction(lead, correction):
    branches = expand_branches(parse_symbol("xi^4 - 2*xi - x"), Direction.PLUS)
    assert len(branches.branches) == 4
    (branch,) = [b for b in branches.branches if abs(b.coefficient_at(Rational(1, 4)) - lead) < 1e-9]
    assert branch.coefficient_at(Rational(-1, 2)) == pytest.approx(correction, abs=1e-6)
    assert branch.coefficient_at(Rational(0)) == 0
    assert branch.ramification == 4
    assert branches.certified


def test_quartic_complex_correction_has_an_imaginary_part():
    branches = expand_branches(parse_symbol("xi^4 - (2+i)*xi - x"), Direction.PLUS)
    (branch,) = [b for b in branches.branches if abs(b.coefficient_at(Rational(1, 4)) - 1) < 1e-9]
    assert branch.coefficient_at(Rational(-1, 2)) == pytest.approx(0.5 + 0.25j, abs=1e-6)


def test_cubic_mixed_leading_terms():
    branches = expand_branches(parse_symbol("xi^3 + i*x*xi^2 + x^2"), Direction.PLUS)
    found = leading_terms(branches)
    expected = sorted(
        [(0.5, EIGHTH), (0.5, -EIGHTH), (1.0, -1j)],
        key=lambda item: (item[0], round(item[1].real, 6), round(item[1].imag, 6)),
    )
    assert [e for e, _ in found] == [e for e, _ in expected]
    for (_, c), (_, c_expected) in zip(found, expected, strict=True):
        assert c == pytest.approx(c_expected, abs=1e-6)
    assert branches.certified


def test_coincident_branches_are_reported_unseparated():
    branches = expand_branches(parse_symbol("(xi - x)^2"), Direction.PLUS)
    assert branches.unseparated == ((0, 1),)
    assert branches.coincident(0, 1)


def test_top_slopes_are_the_roots_of_the_principal_part():
    p, shear = normalize_leading(parse_symbol("xi^3 - 2*x^2*xi + x^3 + x*xi"))
    assert shear == 0
    branches = expand_branches(p, Direction.PLUS)
    slopes = sorted(b.slope.real for b in branches.branches)
    root5 = 5**0.5
    assert slopes == pytest.approx([(-1 - root5) / 2, (root5 - 1) / 2, 1.0], abs=1e-9)
    assert all(abs(b.slope.imag) < 1e-9 for b in branches.branches)


def test_expansion_is_deterministic():
    p = parse_symbol("xi^4 - 2*xi - x")
    first = expand_branches(p, Direction.PLUS)
    second = expand_branches(p, Direction.PLUS)
    assert [b.terms for b in first.branches] == [b.terms for b in second.branches]


def test_depth_above_minus_one_is_rejected():
    with pytest.raises(ValueError, match="depth"):
        expand_branches(parse_symbol("xi - x"), Direction.PLUS, depth_exponent=Rational(-1, 2))


def test_unnormalized_symbols_are_rejected():
    with pytest.raises(ValueError, match="normalized"):
        expand_branches(parse_symbol("x*xi + 1"), Direction.PLUS)


def test_symbols_without_xi_are_rejected():
    with pytest.raises(NotAPolynomialInXi):
        expand_branches(parse_symbol("x + 1"), Direction.PLUS)
