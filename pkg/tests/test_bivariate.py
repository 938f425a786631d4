import pytest
from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly, format_gaussian, gaussian, gaussian_to_complex, to_gaussian


def test_from_terms_drops_zero_coefficients():
    p = BivariatePoly.from_terms({(2, 0): 1, (1, 1): 0, (0, 2): "1/2"})
    assert p.terms == {(2, 0): gaussian(1), (0, 2): gaussian("1/2")}
    assert p.degree == 2
    assert p.xi_degree == 2
    assert p.x_degree == 2


def test_zero_polynomial():
    zero = BivariatePoly.zero()
    assert zero.is_zero
    assert zero.degree == 0
    assert str(zero) == "0"
    assert BivariatePoly.from_terms({(1, 0): 0}) == zero


def test_negative_exponent_rejected():
    with pytest.raises(ValueError, match="negative exponent"):
        BivariatePoly.from_terms({(-1, 0): 1})


def test_floats_are_rejected():
    with pytest.raises(TypeError, match="inexact"):
        to_gaussian(0.5)


def test_arithmetic_is_exact():
    xi, x = BivariatePoly.xi(), BivariatePoly.x()
    assert (xi + x) ** 2 == xi**2 + 2 * x * xi + x**2
    assert (xi - x) * (xi + x) == xi**2 - x**2
    assert 1 - xi == -(xi - 1)
    assert (xi * gaussian(0, 1)).coeff(1, 0) == gaussian(0, 1)


def test_derivatives():
    p = BivariatePoly.from_terms({(2, 3): 1, (1, 0): 5})
    assert p.diff_x() == BivariatePoly.from_terms({(2, 2): 3})
    assert p.diff_xi() == BivariatePoly.from_terms({(1, 3): 2, (0, 0): 5})


def test_equality_and_hash():
    a = BivariatePoly.from_expr("xi**2 + x")
    b = BivariatePoly.from_terms({(0, 1): 1, (2, 0): 1})
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_x_coefficient():
    p = BivariatePoly.from_terms({(2, 0): 1, (2, 3): 4, (0, 1): 1})
    assert p.x_coefficient(2).all_coeffs() == [4, 0, 0, 1]
    assert p.x_coefficient(1).is_zero


def test_evaluate():
    p = BivariatePoly.from_terms({(2, 0): 1, (0, 2): 1, (0, 0): gaussian(0, 1)})
    assert p.evaluate(2.0, 3.0) == pytest.approx(13 + 1j)


def test_conjugate():
    p = BivariatePoly.from_terms({(1, 1): gaussian(1, 2)})
    assert p.conjugate().coeff(1, 1) == gaussian(1, -2)


@pytest.mark.parametrize(
    ("terms", "text"),
    [
        ({(2, 0): 1, (0, 2): 1}, "xi^2 + x^2"),
        ({(1, 0): 1, (0, 1): -1, (0, 0): gaussian(0, 1)}, "xi - x + i"),
        ({(1, 1): gaussian(1, 2), (0, 0): -3}, "(1+2*i)*xi*x - 3"),
        ({(0, 0): Rational(-1, 2)}, "-1/2"),
    ],
)
def test_str(terms, text):
    assert str(BivariatePoly.from_terms(terms)) == text


def test_gaussian_helpers():
    value = gaussian("1/4", -3)
    assert gaussian_to_complex(value) == complex(0.25, -3)
    assert format_gaussian(value) == "(1/4-3*i)"
    assert format_gaussian(gaussian(0, -1)) == "-i"
