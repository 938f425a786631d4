import numpy as np
import pytest
from sympy import I, Matrix, eye

from regsym.algebra.bivariate import gaussian
from regsym.errors import CoincidentNodes
from regsym.factorization.interpolation import build_matrix_A, inverse_B


def test_two_node_matrix():
    a = build_matrix_A([2, 1], 1, 1)
    assert a.exact
    assert a.matrix.to_Matrix() == Matrix([[1, 1], [-1, -2]])
    assert inverse_B([2, 1], 1, 1).to_Matrix() == Matrix([[2, 1], [-1, -1]])


def test_back_group_only():
    a = build_matrix_A([0, 1], 0, 2)
    # columns are xi - 1 and xi
    assert a.matrix.to_Matrix() == Matrix([[1, 1], [-1, 0]])


@pytest.mark.parametrize(("r1", "r2"), [(0, 5), (2, 3), (4, 1), (5, 0)])
def test_exact_inverse(r1, r2):
    xs = [0, 1, gaussian(0, 1), gaussian(2, 1), -1]
    a = build_matrix_A(xs, r1, r2).matrix
    b = inverse_B(xs, r1, r2)
    assert (a * b).to_Matrix() == eye(5)
    assert (b * a).to_Matrix() == eye(5)


def test_coincident_front_nodes_use_the_exact_inverse():
    xs = [1, 1, 2]
    b = inverse_B(xs, 2, 1)
    assert (build_matrix_A(xs, 2, 1).matrix * b).to_Matrix() == eye(3)
    with pytest.raises(CoincidentNodes):
        inverse_B(xs, 2, 1, exact=False)


def test_coincident_back_nodes_are_rejected():
    with pytest.raises(CoincidentNodes, match="nodes 2 and 3"):
        inverse_B([1, 2, 2], 1, 2)


def test_float_inverse():
    xs = [0.5, 1 + 1j, -2.0, 3j]
    a = build_matrix_A(xs, 2, 2, exact=False)
    assert not a.exact
    b = inverse_B(xs, 2, 2, exact=False)
    assert np.allclose(a.matrix @ b, np.eye(4), atol=1e-9)


def test_float_matches_exact():
    xs = [gaussian(1, 2), -3, gaussian(0, -1)]
    exact = build_matrix_A(xs, 1, 2).matrix.to_Matrix()
    numeric = build_matrix_A([1 + 2j, -3, -1j], 1, 2, exact=False).matrix
    assert np.allclose(np.array(exact.tolist(), dtype=complex), numeric)


def test_node_count_must_match():
    with pytest.raises(ValueError, match="expected 3 nodes"):
        build_matrix_A([1, 2], 1, 2)


def test_sympy_imaginary_unit_is_accepted():
    assert build_matrix_A([I, 0], 1, 1).matrix.to_Matrix() == Matrix([[1, 1], [0, -I]])
