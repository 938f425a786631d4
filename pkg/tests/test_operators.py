from sympy import I

from regsym.algebra.bivariate import X
from regsym.algebra.operators import DiffOperator, apply_d, x_poly
from regsym.parsers.symbol_parser import parse_symbol


def test_leading_zero_slots_are_stripped():
    operator = DiffOperator([0, 0, 1, X])
    assert operator.order == 1
    assert operator.coeffs == (x_poly(1), x_poly(X))


def test_zero_operator():
    operator = DiffOperator([0])
    assert operator.is_zero
    assert operator.order == -1
    assert operator.powers() == {}


def test_apply_d():
    assert apply_d(x_poly(X**3)) == x_poly(-3 * I * X**2)
    assert apply_d(x_poly(X**3), 4).is_zero


def test_left_symbol_round_trip():
    a = parse_symbol("x^2*xi^3 - 2*x*xi + i*xi^2 + x^3")
    assert DiffOperator.from_left_symbol(a).left_symbol() == a


def test_power_coefficient():
    operator = DiffOperator([1, 0, X])
    assert operator.power_coefficient(2) == x_poly(1)
    assert operator.power_coefficient(1).is_zero
    assert operator.power_coefficient(0) == x_poly(X)
    assert operator.power_coefficient(5).is_zero


def test_addition_and_equality():
    a = DiffOperator([1, X])
    b = DiffOperator([0, -X])
    assert a + b == DiffOperator([1, 0])
    assert hash(DiffOperator([1, X])) == hash(a)
