"""Exact real-root tests for univariate polynomials with Gaussian-rational coefficients.

A real r is a root of f = g + i*h (g, h with rational coefficients) iff it is a common root of g and h, i.e. a root
of gcd(g, h) over QQ. The gcd is counted with Sturm sequences, so every test here is exact.
"""

import logging

from sympy import Poly
from sympy.polys.domains import QQ

from regsym.errors import ZeroPolynomial

logger = logging.getLogger(__name__)


def real_and_imaginary_parts(f: Poly) -> tuple[Poly, Poly]:
    """Split a univariate Poly over QQ_I into its real and imaginary parts over QQ."""
    gen = f.gen
    real = {monom: c.x for monom, c in f.as_dict(native=True).items() if c.x}
    imaginary = {monom: c.y for monom, c in f.as_dict(native=True).items() if c.y}
    return (
        Poly.from_dict(real, gen, domain=QQ) if real else Poly(0, gen, domain=QQ),
        Poly.from_dict(imaginary, gen, domain=QQ) if imaginary else Poly(0, gen, domain=QQ),
    )


def count_real_roots(f: Poly) -> int:
    """
    Count the distinct real roots of a nonzero univariate polynomial over QQ_I.

    Parameters
    ----------
    f : Poly
        Univariate polynomial over QQ_I (or QQ).

    Raises
    ------
    ZeroPolynomial
        When `f` is identically zero (every real number would be a root).
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes on the whole real line")
    real, imaginary = real_and_imaginary_parts(f)
    common = real.gcd(imaginary)
    if common.degree() <= 0:
        return 0
    return int(common.count_roots())


def has_real_root(f: Poly) -> bool:
    """Whether a nonzero univariate polynomial over QQ_I vanishes somewhere on the real line."""
    return count_real_roots(f) > 0
