"""Closed-form tempered witnesses u = exp(i Q) built from a root branch.

For a branch eta(x) of the symbol, Q(x) = int_1^x eta(t) dt solves D u = eta u with u = exp(i Q), so
log|u| = -Im Q. The integral is taken termwise and only over the exponents >= -1: terms below -1 integrate to a bounded
phase and cannot change the growth class, and an exponent -1 term contributes c log x.

Minus-direction branches are written as eta(t) = xi_j(-t); under x = -t the factor D_x - xi_j(x) becomes
-(D_t + eta(t)), so their witness has log|u| = +Im Q.
"""

import logging
from collections.abc import Sequence

import numpy as np
from sympy import Rational

from regsym.models.branches import PuiseuxSeries
from regsym.models.growth import GrowthSample
from regsym.models.options import Direction

logger = logging.getLogger(__name__)

WITNESS_RANGE = (1.0, 1e6)
DEFAULT_POINTS = 64


def default_grid(start: float = 1.0, stop: float = 100.0, points: int = DEFAULT_POINTS) -> tuple[float, ...]:
    """Geometric sample grid on [start, stop]."""
    return tuple(np.geomspace(start, stop, points).tolist())


def integrated_terms(eta: PuiseuxSeries, im_tol: float = 1e-8) -> list[tuple[Rational, complex]]:
    """Terms of eta that enter the witness phase, with imaginary parts at or below `im_tol` dropped."""
    terms = []
    for term in eta.terms:
        if term.exponent < -1:
            break
        c = term.coefficient
        if abs(c.imag) <= im_tol:
            c = complex(c.real, 0.0)
        terms.append((term.exponent, c))
    return terms


def imaginary_phase(terms: Sequence[tuple[Rational, complex]], xs: np.ndarray) -> np.ndarray:
    """Im int_1^x of the given terms, evaluated termwise."""
    phase = np.zeros_like(xs)
    for exponent, c in terms:
        if not c.imag:
            continue
        if exponent == -1:
            phase += c.imag * np.log(xs)
        else:
            power = float(exponent + 1)
            phase += c.imag * (xs**power - 1.0) / power
    return phase


def counterexample_solution(
    eta: PuiseuxSeries, xs: Sequence[float] | None = None, im_tol: float = 1e-8
) -> GrowthSample:
    """
    Sample the witness exp(i int_1^x eta) of a branch.

    Parameters
    ----------
    eta : PuiseuxSeries
        A branch, expanded at least to the exponent -1.
    xs : Sequence[float] | None
        Sample grid inside [1, 1e6]; 64 geometric points on [1, 100] when omitted.
    im_tol : float
        Imaginary parts at or below this count as zero, as in the growth condition.

    Examples
    --------
    eta = x - 1 has a real phase, so log|u| vanishes identically; eta = i x gives log|u| = -(x^2 - 1)/2.
    """
    grid = np.asarray(default_grid() if xs is None else xs, dtype=float)
    if grid.size and (grid[0] < WITNESS_RANGE[0] or grid[-1] > WITNESS_RANGE[1]):
        raise ValueError(f"witness grids must lie in {list(WITNESS_RANGE)}")
    if eta.truncation_exponent is not None and eta.truncation_exponent > -1:
        raise ValueError(f"branch is only known above x^({eta.truncation_exponent}); the witness needs x^(-1)")
    terms = integrated_terms(eta, im_tol)
    sign = -1.0 if eta.direction is Direction.PLUS else 1.0
    log_abs_u = sign * imaginary_phase(terms, grid)
    logger.debug("witness of %s sampled at %d points", eta, grid.size)
    return GrowthSample(
        xs=tuple(grid.tolist()),
        log_abs_u=tuple(log_abs_u.tolist()),
        note=f"witness exp(i int eta) at {eta.direction.value}",
    )
