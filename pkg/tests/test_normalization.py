import pytest
from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly
from regsym.algebra.normalization import homogeneous_part, leading_form_at, normalize_leading, reflect, shear
from regsym.errors import ZeroPolynomial
from regsym.parsers.symbol_parser import parse_symbol
from regsym.utils.sampling import random_rational, random_symbol


@pytest.mark.parametrize(
    ("symbol", "lam", "expected"),
    [
        ("x*xi", 1, "xi^2 + x*xi"),
        ("xi^2 + x^2", 1, "2*xi^2 + 2*x*xi + x^2"),
        ("xi^2 + x^2", 0, "xi^2 + x^2"),
        ("xi - x + i", Rational(1, 2), "1/2*xi - x + i"),
    ],
)
def test_shear(symbol, lam, expected):
    assert shear(parse_symbol(symbol), lam) == parse_symbol(expected)


def test_shear_group_law(rng):
    for _ in range(20):
        p = random_symbol(rng, max_degree=5)
        lam, mu = random_rational(rng), random_rational(rng)
        assert shear(shear(p, lam), mu) == shear(p, lam + mu)


@pytest.mark.parametrize(
    ("symbol", "expected", "lam"),
    [
        ("xi^2 + x^2", "xi^2 + x^2", 0),
        ("x*xi", "xi^2 + x*xi", 1),
        ("x^2", "xi^2 + 2*x*xi + x^2", 1),
    ],
)
def test_normalize_leading(symbol, expected, lam):
    normalized, used = normalize_leading(parse_symbol(symbol))
    assert normalized == parse_symbol(expected)
    assert used == lam


def test_normalize_leading_skips_roots_of_the_leading_form():
    # p_2(1, lam) = lam^2 - lam vanishes at lam = 1, so the next candidate -1 is used
    p = parse_symbol("x^2 - x*xi")
    assert not leading_form_at(p, 1)
    normalized, lam = normalize_leading(p)
    assert lam == -1
    assert normalized.coeff(2, 0)


def test_normalize_leading_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        normalize_leading(BivariatePoly.zero())


@pytest.mark.parametrize(
    ("j", "expected"),
    [(3, "xi^3 + i*x*xi^2"), (2, "x^2"), (1, "0")],
)
def test_homogeneous_part(j, expected):
    assert homogeneous_part(parse_symbol("xi^3 + i*x*xi^2 + x^2"), j) == parse_symbol(expected)


def test_homogeneous_part_of_a_constant():
    assert homogeneous_part(parse_symbol("5"), 1).is_zero


@pytest.mark.parametrize(
    ("symbol", "expected"),
    [
        ("xi - x + 3", "xi + x + 3"),
        ("xi^2 + x^2", "xi^2 + x^2"),
        ("xi^2 + i*x", "xi^2 - i*x"),
    ],
)
def test_reflect(symbol, expected):
    assert reflect(parse_symbol(symbol)) == parse_symbol(expected)
