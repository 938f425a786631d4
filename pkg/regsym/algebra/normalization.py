"""Shear normalization and related substitutions on polynomial symbols."""

import logging
from collections.abc import Iterator
from itertools import count

from sympy import Poly, Rational
from sympy.polys.domains import QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.algebra.bivariate import XI, BivariatePoly, X, to_gaussian
from regsym.errors import ZeroPolynomial

logger = logging.getLogger(__name__)


def shear(p: BivariatePoly, lam: Rational | int) -> BivariatePoly:
    """
    Substitute x -> x + lam*xi and expand exactly.

    Parameters
    ----------
    p : BivariatePoly
        The symbol.
    lam : Rational | int
        Shear parameter.
    """
    lam = Rational(lam)
    if lam == 0 or p.is_zero:
        return p
    sheared_x = Poly(X + lam * XI, XI, X, domain=QQ_I)
    powers = [Poly(1, XI, X, domain=QQ_I)]
    result = Poly(0, XI, X, domain=QQ_I)
    for (alpha, beta), c in p.terms.items():
        while len(powers) <= beta:
            powers.append(powers[-1] * sheared_x)
        monomial = Poly.from_dict({(alpha, 0): c}, XI, X, domain=QQ_I)
        result = result + monomial * powers[beta]
    return BivariatePoly(result)


def homogeneous_part(p: BivariatePoly, j: int) -> BivariatePoly:
    """Return the terms of total degree `j` (possibly the zero polynomial)."""
    return BivariatePoly.from_terms({(a, b): c for (a, b), c in p.terms.items() if a + b == j})


def reflect(p: BivariatePoly) -> BivariatePoly:
    """Return p(-x, xi), so expansions at x -> -inf can run at +inf."""
    return BivariatePoly.from_terms({(a, b): (-c if b % 2 else c) for (a, b), c in p.terms.items()})


def leading_form_at(p: BivariatePoly, lam: Rational | int) -> GaussianRational:
    """Evaluate sum over alpha+beta=m of c[alpha, beta] lam^beta, the xi^m coefficient of shear(p, lam)."""
    m = p.degree
    total = to_gaussian(0)
    for (alpha, beta), c in p.terms.items():
        if alpha + beta == m:
            total = total + c * to_gaussian(Rational(lam) ** beta)
    return total


def _shear_candidates() -> Iterator[int]:
    for n in count(1):
        yield n
        yield -n


def normalize_leading(p: BivariatePoly) -> tuple[BivariatePoly, Rational]:
    """
    Shear `p` so that the coefficient of xi^m (m the total degree) is nonzero.

    Parameters
    ----------
    p : BivariatePoly
        Nonzero symbol.

    Returns
    -------
    tuple[BivariatePoly, Rational]
        The normalized symbol and the shear parameter used; the parameter is 0 when `p` is already normalized and
        otherwise the first of 1, -1, 2, -2, ... that works.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    if p.coeff(p.degree, 0):
        return p, Rational(0)
    for lam in _shear_candidates():
        if leading_form_at(p, lam):
            logger.debug("normalized %s with shear parameter %s", p, lam)
            return shear(p, lam), Rational(lam)
    raise AssertionError("unreachable: a nonzero polynomial has finitely many roots")
