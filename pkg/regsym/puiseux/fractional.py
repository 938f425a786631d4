"""Polynomials in xi whose coefficients are finite sums of rational powers of x.

This module provides:
- numeric_context: a private mpmath context at the engine's working precision.
- FractionalPoly: the object the Newton-Puiseux recursion works on. It starts as an exact copy of the symbol and
  stays exact while every substituted leading coefficient is a Gaussian rational; after the first irrational
  coefficient it switches to mpmath complex numbers and tracks, per coefficient, the sum of the absolute values of
  its contributions so cancellations can be recognised.
"""

import logging
from collections import defaultdict
from math import comb
from typing import Any

from mpmath import MPContext
from sympy import Rational
from sympy.polys.domains import QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.algebra.bivariate import BivariatePoly

logger = logging.getLogger(__name__)

WORKING_DPS = 60

Coefficient = GaussianRational | Any
Key = tuple[int, Rational]


def numeric_context(dps: int = WORKING_DPS) -> MPContext:
    """Return a fresh mpmath context; one per expansion keeps concurrent runs independent."""
    ctx = MPContext()
    ctx.dps = dps
    return ctx


def gaussian_to_mpc(ctx: MPContext, value: GaussianRational) -> Any:  # noqa: ANN401
    """Convert an exact coefficient to an mpc of the given context."""
    re = ctx.mpf(int(value.x.numerator)) / int(value.x.denominator)
    im = ctx.mpf(int(value.y.numerator)) / int(value.y.denominator)
    return ctx.mpc(re, im)


def to_mpc(ctx: MPContext, value: Coefficient) -> Any:  # noqa: ANN401
    """Convert an exact or numeric coefficient to an mpc of `ctx`."""
    if isinstance(value, GaussianRational):
        return gaussian_to_mpc(ctx, value)
    return ctx.mpc(value)


def coefficient_to_complex(value: Coefficient) -> complex:
    """Round an exact or numeric coefficient to a Python complex."""
    if isinstance(value, GaussianRational):
        re = value.x.numerator / value.x.denominator
        im = value.y.numerator / value.y.denominator
        return complex(float(re), float(im))
    return complex(value)


class FractionalPoly:
    """
    A polynomial sum c[alpha, e] xi^alpha x^e with integer alpha >= 0 and rational e.

    Attributes
    ----------
    terms : dict[tuple[int, Rational], Coefficient]
        Nonzero coefficients keyed by (alpha, e).
    ctx : MPContext | None
        None for exact polynomials, the numeric context otherwise.
    scales : dict[tuple[int, Rational], mpf] | None
        For numeric polynomials, the sum of |contributions| behind every coefficient.
    """

    def __init__(self, terms: dict[Key, Coefficient], ctx: MPContext | None = None, scales: dict | None = None) -> None:
        self.terms = terms
        self.ctx = ctx
        self.scales = scales

    @classmethod
    def from_bivariate(cls, p: BivariatePoly) -> "FractionalPoly":
        """Exact copy of a bivariate symbol."""
        return cls({(alpha, Rational(beta)): c for (alpha, beta), c in p.terms.items()})

    @property
    def exact(self) -> bool:
        """Whether the coefficients are exact Gaussian rationals."""
        return self.ctx is None

    @property
    def is_zero(self) -> bool:
        """Whether no term survived."""
        return not self.terms

    @property
    def xi_min(self) -> int:
        """Smallest xi-degree present; this many roots vanish identically."""
        return min(alpha for alpha, _ in self.terms)

    @property
    def xi_degree(self) -> int:
        """Degree in xi."""
        return max(alpha for alpha, _ in self.terms)

    def column_tops(self) -> dict[int, Rational]:
        """For every xi-degree present, the largest x-exponent carrying a nonzero coefficient."""
        tops: dict[int, Rational] = {}
        for alpha, e in self.terms:
            if alpha not in tops or e > tops[alpha]:
                tops[alpha] = e
        return tops

    def coefficient(self, alpha: int, e: Rational) -> Coefficient:
        """Coefficient of xi^alpha x^e (an exact or numeric zero when absent)."""
        if (alpha, e) in self.terms:
            return self.terms[(alpha, e)]
        return self.zero

    @property
    def zero(self) -> Coefficient:
        """Zero of the coefficient ring."""
        return QQ_I.zero if self.exact else self.ctx.mpc(0)

    def to_numeric(self, ctx: MPContext) -> "FractionalPoly":
        """Numeric copy in `ctx`; exact coefficients become their own scale."""
        if not self.exact:
            return self
        terms = {key: gaussian_to_mpc(ctx, c) for key, c in self.terms.items()}
        return FractionalPoly(terms, ctx, {key: abs(value) for key, value in terms.items()})

    def shift(self, c: Coefficient, mu: Rational, ctx: MPContext, zero_tol: float) -> "FractionalPoly":
        """
        Substitute xi -> c x^mu + xi.

        Parameters
        ----------
        c : Coefficient
            Leading coefficient of the branch; exact values keep an exact polynomial exact.
        mu : Rational
            Exponent of the substituted term.
        ctx : MPContext
            Context used when the result is numeric.
        zero_tol : float
            Numeric coefficients with |value| <= zero_tol * scale are dropped.
        """
        if self.exact and isinstance(c, GaussianRational):
            return self._shift_exact(c, mu)
        return self.to_numeric(ctx)._shift_numeric(to_mpc(ctx, c), mu, zero_tol)

    def _shift_exact(self, c: GaussianRational, mu: Rational) -> "FractionalPoly":
        powers = [QQ_I.one]
        for _ in range(self.xi_degree):
            powers.append(powers[-1] * c)
        shifted: dict[Key, GaussianRational] = defaultdict(lambda: QQ_I.zero)
        for (alpha, e), a in self.terms.items():
            for k in range(alpha + 1):
                shifted[(k, e + mu * (alpha - k))] += a * powers[alpha - k] * comb(alpha, k)
        return FractionalPoly({key: value for key, value in shifted.items() if value})

    def _shift_numeric(self, c: Any, mu: Rational, zero_tol: float) -> "FractionalPoly":  # noqa: ANN401
        ctx = self.ctx
        powers = [ctx.mpc(1)]
        for _ in range(self.xi_degree):
            powers.append(powers[-1] * c)
        shifted: dict[Key, Any] = defaultdict(lambda: ctx.mpc(0))
        scales: dict[Key, Any] = defaultdict(lambda: ctx.mpf(0))
        for (alpha, e), a in self.terms.items():
            scale = self.scales[(alpha, e)]
            for k in range(alpha + 1):
                weight = comb(alpha, k)
                key = (k, e + mu * (alpha - k))
                shifted[key] += a * powers[alpha - k] * weight
                scales[key] += scale * abs(powers[alpha - k]) * weight
        kept = {key: value for key, value in shifted.items() if abs(value) > zero_tol * scales[key]}
        dropped = len(shifted) - len(kept)
        if dropped:
            logger.debug("dropped %d cancelled coefficients after shifting by c*x^%s", dropped, mu)
        return FractionalPoly(kept, ctx, {key: scales[key] for key in kept})
