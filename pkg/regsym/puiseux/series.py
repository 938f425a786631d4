"""Evaluation and residual certificates for truncated Puiseux series."""

import logging
import math
from collections.abc import Sequence

import numpy as np
from mpmath import MPContext
from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly
from regsym.algebra.normalization import reflect
from regsym.errors import NumericOverflow
from regsym.models.branches import PuiseuxSeries, ResidualCertificate
from regsym.models.options import Direction, Tolerances
from regsym.puiseux.fractional import FractionalPoly, gaussian_to_mpc, numeric_context, to_mpc

logger = logging.getLogger(__name__)

NEGATIVE_INFINITY = float("-inf")


def evaluate_series(s: PuiseuxSeries, x: float) -> complex:
    """
    Evaluate sum c_e x^e with the real positive branch of every fractional power.

    Parameters
    ----------
    s : PuiseuxSeries
        The series; minus-direction series are already written in the positive variable.
    x : float
        Evaluation point, x >= 1.
    """
    return sum((term.coefficient * x ** float(term.exponent) for term in s.terms), start=0j)


def difference_exponent(a: PuiseuxSeries, b: PuiseuxSeries, depth: Rational, tol: float) -> Rational | None:
    """
    Leading exponent of a - b, read off the two truncations.

    Returns None when the series are identical terminating roots, and `depth` when they agree on every exponent
    above it.
    """
    exponents = sorted({t.exponent for t in a.terms} | {t.exponent for t in b.terms}, reverse=True)
    for e in exponents:
        if e <= depth and not (a.is_terminating and b.is_terminating):
            break
        difference = a.coefficient_at(e) - b.coefficient_at(e)
        if abs(difference) > tol * (1 + abs(a.coefficient_at(e))):
            return e
    if a.is_terminating and b.is_terminating:
        return None
    return depth


def analytic_bound(branches: Sequence[PuiseuxSeries], j: int, depth: Rational, tolerances: Tolerances) -> float | None:
    """
    Upper bound for the residual slope of branch j.

    p(x, s_j) = c * (s_j - xi_j) * prod_{k != j} (s_j - xi_k), the first factor is O(x^depth) and every other factor
    grows like x^(leading exponent of xi_j - xi_k). Terminating branches have no bound (their residual must vanish).
    """
    if branches[j].is_terminating:
        return None
    total = depth
    for k, other in enumerate(branches):
        if k == j:
            continue
        exponent = difference_exponent(branches[j], other, depth, tolerances.cluster_tol)
        total += depth if exponent is None else exponent
    return float(total) + tolerances.residual_slack


def _precise_terms(ctx: MPContext, s: PuiseuxSeries) -> list[tuple[Rational, object]]:
    if s.precise_terms is not None:
        return [(e, to_mpc(ctx, c)) for e, c in s.precise_terms]
    return [(term.exponent, ctx.mpc(term.coefficient)) for term in s.terms]


def vanishes_exactly(p: BivariatePoly, s: PuiseuxSeries) -> bool:
    """Whether an exact terminating series is an exact root of `p` (or of p(-x, xi) for the minus direction)."""
    if not (s.is_terminating and s.exact and s.precise_terms is not None):
        return False
    symbol = reflect(p) if s.direction is Direction.MINUS else p
    fp = FractionalPoly.from_bivariate(symbol)
    ctx = numeric_context()
    for e, c in s.precise_terms:
        fp = fp.shift(c, e, ctx, 0.0)
    return not any(alpha == 0 for alpha, _ in fp.terms)


def _residuals(p: BivariatePoly, s: PuiseuxSeries, xs: Sequence[float]) -> tuple[list[float], float]:
    symbol = reflect(p) if s.direction is Direction.MINUS else p
    ctx = numeric_context()
    terms = _precise_terms(ctx, s)
    symbol_terms = [(alpha, beta, gaussian_to_mpc(ctx, c)) for (alpha, beta), c in symbol.terms.items()]
    residuals = []
    worst_relative = 0.0
    for x in xs:
        xm = ctx.mpf(x)
        value = sum((c * ctx.power(xm, ctx.mpf(e.p) / e.q) for e, c in terms), ctx.mpc(0))
        total = ctx.mpc(0)
        scale = ctx.mpf(0)
        for alpha, beta, a in symbol_terms:
            contribution = a * value**alpha * xm**beta
            total += contribution
            scale += abs(contribution)
        magnitude = abs(total)
        if not ctx.isfinite(magnitude):
            raise NumericOverflow(f"residual at x={x:g} is not finite")
        residuals.append(magnitude)
        if scale:
            worst_relative = max(worst_relative, float(magnitude / scale))
    return [ctx.log(r) if r else None for r in residuals], worst_relative


def residual_slope(p: BivariatePoly, s: PuiseuxSeries, sample_xs: Sequence[float]) -> float:
    """
    Log-log regression slope of x -> |p(x, s(x))|.

    Parameters
    ----------
    p : BivariatePoly
        The symbol the series was computed for (unreflected, also for minus-direction series).
    s : PuiseuxSeries
        Branch to check.
    sample_xs : Sequence[float]
        At least 8 geometric sample points in [1e2, 1e6].

    Returns
    -------
    float
        The slope, or -inf when the residual vanishes identically.
    """
    if len(sample_xs) < 8:
        raise ValueError("residual slopes need at least 8 sample points")
    if vanishes_exactly(p, s):
        return NEGATIVE_INFINITY
    logs, _ = _residuals(p, s, sample_xs)
    return _fit_slope(sample_xs, logs)


def _fit_slope(xs: Sequence[float], logs: list) -> float:
    points = [(math.log(x), float(value)) for x, value in zip(xs, logs, strict=True) if value is not None]
    if len(points) < 2:
        return NEGATIVE_INFINITY
    log_x, log_r = np.array(points).T
    return float(np.polyfit(log_x, log_r, 1)[0])


def residual_certificate(
    p: BivariatePoly,
    branches: Sequence[PuiseuxSeries],
    j: int,
    depth: Rational,
    sample_xs: Sequence[float],
    tolerances: Tolerances,
) -> ResidualCertificate:
    """
    Certify branch j of a branch list.

    Truncated branches pass when the residual slope stays below `analytic_bound`; terminating branches pass when
    the residual vanishes exactly or stays below the precision relative to the size of its terms.
    """
    s = branches[j]
    bound = analytic_bound(branches, j, depth, tolerances)
    if vanishes_exactly(p, s):
        return ResidualCertificate(branch=j, slope=NEGATIVE_INFINITY, bound=bound, max_relative=0.0, passed=True)
    logs, worst_relative = _residuals(p, s, sample_xs)
    slope = _fit_slope(sample_xs, logs)
    passed = worst_relative <= tolerances.precision if bound is None else slope <= bound
    if not passed:
        logger.warning("residual certificate failed for branch %d: slope %.3f, bound %s", j, slope, bound)
    return ResidualCertificate(branch=j, slope=slope, bound=bound, max_relative=worst_relative, passed=passed)
