import pytest
from sympy import I

from regsym.algebra.bivariate import X, gaussian
from regsym.algebra.operators import DiffOperator, x_poly
from regsym.errors import FactorizationIdentityError
from regsym.factorization.composition import (
    compose_operators,
    expand_factored,
    factor_product,
    factorization_remainders,
    weyl_product_remainders,
    weyl_product_standard,
)
from regsym.parsers.symbol_parser import parse_symbol

D = DiffOperator([1, 0])


def test_commutator_of_d_and_x():
    assert compose_operators(D, DiffOperator([X])) == DiffOperator([X, gaussian(0, -1)])
    assert compose_operators(DiffOperator([X]), D) == DiffOperator([X, 0])


def test_square_of_first_order_factor():
    expected = DiffOperator([1, -2 * X, X**2 + I])
    assert factor_product([X, X]) == expected
    assert compose_operators(DiffOperator([1, -X]), DiffOperator([1, -X])) == expected


def test_composition_is_associative():
    a = DiffOperator([X, 1, I * X**2])
    b = DiffOperator([1, X**3])
    c = DiffOperator([X**2 - 1, 0, 2 * X])
    assert compose_operators(compose_operators(a, b), c) == compose_operators(a, compose_operators(b, c))


def test_composition_applies_in_sequence():
    a = DiffOperator([1, X])
    b = DiffOperator([X**2, 0, 1])
    u = X**5 + 3 * X
    assert compose_operators(a, b).apply(x_poly(u)) == a.apply(b.apply(x_poly(u)))


def test_remainders_of_non_constant_roots():
    operator, remainders = factorization_remainders([1], [1, X])
    assert operator == DiffOperator([1, -X - 1, X + I])
    assert [r.as_expr() for r in remainders] == [0, 0, I]


def test_expand_factored_with_constant_roots():
    operator = expand_factored([1, 2], [3, gaussian(0, 1)])
    assert operator == compose_operators(DiffOperator([1, 2]), factor_product([3, I]))
    assert operator.order == 3


def test_expand_factored_accepts_first_order_remainders():
    operator = expand_factored([X, 1], [X**2])
    assert operator.order == 2


def test_leading_coefficient_must_be_nonzero():
    with pytest.raises(ValueError, match="a_0"):
        expand_factored([0, 1], [X])


def test_weyl_product_standard():
    standard = weyl_product_standard([1, X], [1, X])
    assert standard == parse_symbol("xi^2 + 2*x*xi + x^2 - i")
    assert [r.as_expr() for r in weyl_product_remainders([1, X], [1, X])] == [0, 0, -I]


def test_weyl_product_of_constant_slots_has_no_remainders():
    assert all(r.is_zero for r in weyl_product_remainders([1, 2], [1, 0, 5]))
    assert weyl_product_standard([1, 2], [1, 0, 5]) == parse_symbol("(xi + 2)*(xi^2 + 5)")


def test_identity_error_is_an_assertion():
    assert issubclass(FactorizationIdentityError, AssertionError)
