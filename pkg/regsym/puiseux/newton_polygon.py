"""Newton polygon at infinity.

A term c xi^alpha x^e evaluated on xi = c' x^mu grows like x^(e + mu*alpha). The candidate leading exponents mu of
the roots are the values for which at least two terms tie for the largest growth, i.e. the edges of the upper
convex hull of the points (alpha, max e). Edges are returned left to right, which is increasing mu.
"""

import logging
from typing import NamedTuple

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.algebra.bivariate import BivariatePoly
from regsym.errors import NotAPolynomialInXi
from regsym.puiseux.fractional import Coefficient, FractionalPoly

logger = logging.getLogger(__name__)

C = Symbol("c")

Point = tuple[int, Rational]


class PolygonEdge(NamedTuple):
    slope: Rational
    left: int
    right: int
    coefficients: tuple[Coefficient, ...]

    @property
    def length(self) -> int:
        """Number of roots with leading exponent `slope`."""
        return self.right - self.left

    @property
    def exact(self) -> bool:
        """Whether every edge coefficient is an exact Gaussian rational."""
        return all(isinstance(c, GaussianRational) for c in self.coefficients)

    def as_poly(self) -> Poly:
        """The exact edge polynomial sum coefficients[k] c^k as a sympy Poly in `C` over QQ_I."""
        if not self.exact:
            raise ValueError("numeric edge polynomials have no exact form")
        return Poly.from_dict({(k,): value for k, value in enumerate(self.coefficients) if value}, C, domain=QQ_I)


def cross(o: Point, a: Point, b: Point) -> Rational:
    """Cross product of OA and OB; negative for a clockwise turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def upper_hull(points: list[Point]) -> list[Point]:
    """Upper convex hull of points with distinct abscissae, left to right, collinear points removed."""
    hull: list[Point] = []
    for point in sorted(points):
        while len(hull) >= 2 and cross(hull[-2], hull[-1], point) >= 0:
            hull.pop()
        hull.append(point)
    return hull


def polygon_edges(fp: FractionalPoly) -> list[PolygonEdge]:
    """
    Return the edges of the Newton polygon at infinity of `fp`, ordered by increasing slope.

    Parameters
    ----------
    fp : FractionalPoly
        Polynomial in xi with fractional-power coefficients.
    """
    tops = fp.column_tops()
    hull = upper_hull(list(tops.items()))
    edges = []
    for (left, e_left), (right, e_right) in zip(hull, hull[1:], strict=False):
        mu = (e_left - e_right) / (right - left)
        level = e_left + mu * left
        coefficients = tuple(
            fp.coefficient(alpha, tops[alpha]) if alpha in tops and tops[alpha] + mu * alpha == level else fp.zero
            for alpha in range(left, right + 1)
        )
        edges.append(PolygonEdge(Rational(mu), left, right, coefficients))
    logger.debug("polygon edges: %s", [(edge.slope, edge.length) for edge in edges])
    return edges


def newton_polygon_slopes(p: BivariatePoly) -> list[tuple[Rational, Poly]]:
    """
    Return (slope, edge polynomial) for every edge of the Newton polygon at infinity of `p`.

    Roots of the edge polynomial are the candidate leading coefficients c of branches xi ~ c x^slope. Edge degrees add
    up to deg_xi p minus the multiplicity of the root xi = 0.

    Parameters
    ----------
    p : BivariatePoly
        Symbol with positive xi-degree.
    """
    if p.is_zero or p.xi_degree == 0:
        raise NotAPolynomialInXi(f"{p} does not depend on xi")
    return [(edge.slope, edge.as_poly()) for edge in polygon_edges(FractionalPoly.from_bivariate(p))]
