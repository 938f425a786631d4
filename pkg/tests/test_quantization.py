import pytest
from sympy import I, Rational

from regsym.algebra.bivariate import X, BivariatePoly, gaussian
from regsym.algebra.normalization import homogeneous_part
from regsym.algebra.operators import DiffOperator, x_poly
from regsym.algebra.quantization import left_from_weyl, weyl_from_left
from regsym.parsers.symbol_parser import parse_symbol
from regsym.utils.sampling import random_symbol

X_XI = BivariatePoly.from_terms({(1, 1): 1})
X2_XI2 = BivariatePoly.from_terms({(2, 2): 1})


def test_weyl_correction_of_x_xi():
    assert weyl_from_left(X_XI) == X_XI + gaussian(0, "1/2")
    assert left_from_weyl(X_XI + gaussian(0, "1/2")) == X_XI


def test_second_order_corrections():
    expected = BivariatePoly.from_terms({(2, 2): 1, (1, 1): gaussian(0, 2), (0, 0): Rational(-1, 2)})
    assert weyl_from_left(X2_XI2) == expected
    assert left_from_weyl(expected) == X2_XI2


@pytest.mark.parametrize("text", ["xi^5", "xi^2 + x^2", "x^7 + 3*x", "i"])
def test_symbols_without_mixed_terms_are_fixed(text):
    p = parse_symbol(text)
    assert weyl_from_left(p) == p
    assert left_from_weyl(p) == p


def test_round_trip_on_random_symbols(rng):
    for _ in range(60):
        a = random_symbol(rng)
        assert left_from_weyl(weyl_from_left(a)) == a
        assert weyl_from_left(left_from_weyl(a)) == a


def test_top_degree_part_is_preserved(rng):
    for _ in range(30):
        a = random_symbol(rng)
        m = a.degree
        assert homogeneous_part(weyl_from_left(a), m) == homogeneous_part(a, m)


@pytest.mark.parametrize("k", range(9))
def test_weyl_symbol_x_xi_is_the_symmetrized_operator(k):
    # (x D + D x) / 2 applied to x^k is -i (k + 1/2) x^k
    operator = DiffOperator.from_left_symbol(left_from_weyl(X_XI))
    assert operator.apply(X**k) == x_poly(-I * (k + Rational(1, 2)) * X**k)


@pytest.mark.parametrize("k", range(9))
def test_left_symbol_acts_term_by_term(k):
    a = parse_symbol("x^2*xi^3 - 2*x*xi + i*xi^2 + x^3")
    operator = DiffOperator.from_left_symbol(a)
    by_hand = x_poly(0)
    for (alpha, beta), c in a.terms.items():
        derivative = x_poly(X**k)
        for _ in range(alpha):
            derivative = derivative.diff(X) * x_poly(-I)
        by_hand = by_hand + x_poly(c) * x_poly(X**beta) * derivative
    assert operator.apply(X**k) == by_hand
