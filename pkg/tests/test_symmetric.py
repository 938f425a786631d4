import pytest
from sympy import Poly, expand
from sympy.polys.domains import QQ_I

from regsym.algebra.bivariate import X, gaussian
from regsym.errors import IndexOutOfRange
from regsym.factorization.symmetric import elementary_symmetric, symmetric_coefficients


def test_integer_values():
    assert symmetric_coefficients([1, 2, 3]) == [1, -6, 11, -6]
    assert symmetric_coefficients([]) == [1]


def test_gaussian_values():
    coefficients = symmetric_coefficients([gaussian(0, 1), gaussian(0, -1)], one=QQ_I.one)
    assert coefficients[0] == QQ_I.one
    assert not coefficients[1]
    assert coefficients[2] == QQ_I.one


def test_polynomial_values_give_vieta():
    one = Poly(1, X, domain=QQ_I)
    values = [Poly(X, X, domain=QQ_I), Poly(X + 1, X, domain=QQ_I)]
    sigma = symmetric_coefficients(values, one=one)
    assert [s.as_expr() for s in sigma] == [1, -(2 * X + 1), expand(X * (X + 1))]


@pytest.mark.parametrize(("h", "value"), [(0, 1), (1, -6), (2, 11), (3, -6)])
def test_elementary_symmetric(h, value):
    assert elementary_symmetric(h, [1, 2, 3]) == value


@pytest.mark.parametrize("h", [-1, 4])
def test_index_out_of_range(h):
    with pytest.raises(IndexOutOfRange):
        elementary_symmetric(h, [1, 2, 3])
