"""Seeded random inputs for the property suites.

Every generator takes a `numpy.random.Generator`, so a seed reproduces the whole case list.
"""

import numpy as np
from sympy import Poly, Rational
from sympy.polys.domains import QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.algebra.bivariate import BivariatePoly, X, gaussian
from regsym.algebra.operators import DiffOperator

MAX_NUMERATOR = 5
MAX_DENOMINATOR = 4


def random_rational(rng: np.random.Generator, max_numerator: int = MAX_NUMERATOR) -> Rational:
    """A rational p/q with |p| <= max_numerator and 1 <= q <= 4."""
    numerator = int(rng.integers(-max_numerator, max_numerator + 1))
    return Rational(numerator, int(rng.integers(1, MAX_DENOMINATOR + 1)))


def random_gaussian(rng: np.random.Generator, nonzero: bool = False) -> GaussianRational:
    """A Gaussian rational with small numerators and denominators."""
    while True:
        value = gaussian(random_rational(rng), random_rational(rng))
        if value or not nonzero:
            return value


def random_symbol(rng: np.random.Generator, max_degree: int = 8, max_terms: int = 6) -> BivariatePoly:
    """A nonzero symbol of total degree at most `max_degree`."""
    while True:
        terms = {}
        for _ in range(int(rng.integers(1, max_terms + 1))):
            degree = int(rng.integers(0, max_degree + 1))
            alpha = int(rng.integers(0, degree + 1))
            terms[(alpha, degree - alpha)] = random_gaussian(rng, nonzero=True)
        symbol = BivariatePoly.from_terms(terms)
        if not symbol.is_zero:
            return symbol


def random_x_poly(rng: np.random.Generator, max_degree: int = 3, nonzero: bool = False) -> Poly:
    """A polynomial in x over QQ_I of degree at most `max_degree`."""
    while True:
        degree = int(rng.integers(0, max_degree + 1))
        coefficients = {(k,): random_gaussian(rng) for k in range(degree + 1)}
        nonzero_terms = {monom: c for monom, c in coefficients.items() if c}
        poly = Poly.from_dict(nonzero_terms, X, domain=QQ_I) if nonzero_terms else Poly(0, X, domain=QQ_I)
        if not nonzero or not poly.is_zero:
            return poly


def random_operator(rng: np.random.Generator, max_order: int = 3, max_degree: int = 3) -> DiffOperator:
    """A nonzero operator sum c_k(x) D^(m - k)."""
    order = int(rng.integers(0, max_order + 1))
    slots = [random_x_poly(rng, max_degree, nonzero=True)]
    slots.extend(random_x_poly(rng, max_degree) for _ in range(order))
    return DiffOperator(slots)


def random_nodes(rng: np.random.Generator, count: int) -> list[GaussianRational]:
    """`count` pairwise distinct Gaussian-rational nodes."""
    nodes: list[GaussianRational] = []
    while len(nodes) < count:
        node = random_gaussian(rng)
        if node not in nodes:
            nodes.append(node)
    return nodes


def random_float_nodes(
    rng: np.random.Generator, count: int, radius: float = 10.0, min_gap: float = 0.1
) -> list[complex]:
    """`count` complex nodes in the disc of the given radius, pairwise at least `min_gap` apart."""
    nodes: list[complex] = []
    while len(nodes) < count:
        modulus = radius * np.sqrt(rng.random())
        node = complex(modulus * np.exp(2j * np.pi * rng.random()))
        if all(abs(node - other) >= min_gap for other in nodes):
            nodes.append(node)
    return nodes
