import pytest
from sympy import Poly, Rational
from sympy.polys.domains import QQ_I

from regsym.errors import NotAPolynomialInXi
from regsym.parsers.symbol_parser import parse_symbol
from regsym.puiseux.newton_polygon import C, cross, newton_polygon_slopes, upper_hull


@pytest.mark.parametrize(
    ("symbol", "slopes"),
    [
        ("xi^2 + x^2", [(Rational(1), C**2 + 1)]),
        ("xi - x + 1", [(Rational(1), C - 1)]),
        ("xi^4 - 2*xi - x", [(Rational(1, 4), C**4 - 1)]),
    ],
)
def test_single_edge(symbol, slopes):
    found = newton_polygon_slopes(parse_symbol(symbol))
    assert [(slope, poly) for slope, poly in found] == [(s, Poly(e, C, domain=QQ_I)) for s, e in slopes]


def test_edges_are_ordered_by_slope():
    # xi^3 + i x xi^2 + x^2: three roots, one like x and two like x^(1/2)
    found = newton_polygon_slopes(parse_symbol("xi^3 + i*x*xi^2 + x^2"))
    assert [slope for slope, _ in found] == [Rational(1, 2), Rational(1)]
    assert [poly.degree() for _, poly in found] == [2, 1]


def test_edge_degrees_count_the_roots():
    p = parse_symbol("(1 + x^2)*xi^4 + 1")
    found = newton_polygon_slopes(p)
    assert found == [(Rational(-1, 2), Poly(C**4 + 1, C, domain=QQ_I))]


def test_vanishing_root_is_not_an_edge():
    found = newton_polygon_slopes(parse_symbol("xi^2 - x*xi"))
    assert sum(poly.degree() for _, poly in found) == 1


def test_symbols_without_xi_are_rejected():
    with pytest.raises(NotAPolynomialInXi):
        newton_polygon_slopes(parse_symbol("x^2 + 1"))


def test_upper_hull_drops_collinear_points():
    points = [(0, Rational(2)), (1, Rational(1)), (2, Rational(0)), (1, Rational(0))]
    assert upper_hull(points[:3]) == [(0, 2), (2, 0)]
    assert cross((0, 0), (1, 0), (0, 1)) > 0
