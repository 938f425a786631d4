"""Numerical solutions of P u = 0 with renormalized magnitudes.

This module provides:
- admissible_span: shrink an integration span past the real zeros of the leading coefficient.
- companion_system: the first-order system of an operator sum c_k(x) D^(m - k), D = -i d/dx.
- integrate_seed: one solution, integrated piece by piece with DOP853 and renormalized after every piece.
- solve_operator_equation: one `GrowthSample` per seed of a basis of initial conditions.

With y_j = u^(j), the equation reads u^(m) = -(1 / c_0) sum_{k >= 1} i^k c_k u^(m - k). After each piece the state is
divided by its norm and log(norm) is accumulated, so solutions of size e^(x^2 / 2) stay representable. Piece lengths
follow the Fujiwara bound 2 max_k |c_k / c_0|^(1/k) on the roots in xi, which bounds the growth rate of log|u|.
"""

import logging
from collections.abc import Callable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.integrate import solve_ivp
from sympy import Poly

from regsym.algebra.bivariate import gaussian_to_complex
from regsym.algebra.operators import DiffOperator
from regsym.errors import LeadingCoeffVanishes, StiffnessFailure
from regsym.models.growth import GrowthSample
from regsym.oracle.witness import DEFAULT_POINTS
from regsym.regularity.real_roots import real_and_imaginary_parts

logger = logging.getLogger(__name__)

SPAN_LIMIT = (1.0, 1e4)
LOG_BUDGET = 20.0
MAX_PIECE = 1.0
RTOL = 1e-11
ATOL = 1e-13
ZERO_MARGIN = 1e-3


def _coefficients(slot: Poly) -> np.ndarray:
    """Ascending complex coefficients of a slot."""
    values = np.zeros(max(slot.degree(), 0) + 1, dtype=complex)
    for (k,), c in slot.as_dict(native=True).items():
        values[k] = gaussian_to_complex(c)
    return values


def leading_real_zeros(P: DiffOperator) -> list[float]:
    """Real zeros of the leading coefficient c_0, in increasing order."""
    real, imaginary = real_and_imaginary_parts(P.coeffs[0])
    common = real.gcd(imaginary)
    if common.degree() <= 0:
        return []
    return sorted(float(root) for root in common.real_roots())


def admissible_span(P: DiffOperator, span: tuple[float, float]) -> tuple[float, float]:
    """
    Return the part of `span` to the right of every real zero of the leading coefficient.

    Raises
    ------
    LeadingCoeffVanishes
        When the leading coefficient has a zero at or beyond the end of the span.
    """
    start, stop = span
    zeros = [z for z in leading_real_zeros(P) if z >= start]
    if not zeros:
        return start, stop
    last = zeros[-1]
    shifted = last + ZERO_MARGIN * (1 + abs(last))
    if shifted >= stop:
        raise LeadingCoeffVanishes(f"leading coefficient vanishes at x = {last:.6g}, past the end of the span")
    logger.warning("leading coefficient vanishes at x = %.6g; integrating on [%.6g, %.6g]", last, shifted, stop)
    return shifted, stop


def companion_system(P: DiffOperator) -> tuple[Callable[[float, np.ndarray], np.ndarray], Callable[[float], float]]:
    """
    Build the right-hand side of the companion system and the growth-rate bound of an operator.

    Parameters
    ----------
    P : DiffOperator
        Operator of order m >= 1.

    Returns
    -------
    tuple
        ``rhs(x, y)`` for `scipy.integrate.solve_ivp`, and ``rate(x)``, an upper bound on |xi_j(x)|.
    """
    m = P.order
    if m < 1:
        raise ValueError("the operator must have order at least 1")
    coefficients = [_coefficients(slot) for slot in P.coeffs]
    weights = [1j**k for k in range(m + 1)]

    def rhs(x: float, y: np.ndarray) -> np.ndarray:
        lead = npoly.polyval(x, coefficients[0])
        dy = np.empty_like(y)
        dy[:-1] = y[1:]
        dy[-1] = -sum(weights[k] * npoly.polyval(x, coefficients[k]) * y[m - k] for k in range(1, m + 1)) / lead
        return dy

    def rate(x: float) -> float:
        lead = abs(npoly.polyval(x, coefficients[0]))
        return 2 * max((abs(npoly.polyval(x, coefficients[k])) / lead) ** (1 / k) for k in range(1, m + 1))

    return rhs, rate


def integrate_seed(
    P: DiffOperator,
    seed: Sequence[complex],
    xs: Sequence[float],
    log_budget: float = LOG_BUDGET,
    rtol: float = RTOL,
    atol: float = ATOL,
) -> list[float]:
    """
    Integrate one solution from xs[0] and return log|u| at every point of `xs`.

    Parameters
    ----------
    P : DiffOperator
        Operator whose leading coefficient does not vanish on [xs[0], xs[-1]].
    seed : Sequence[complex]
        Initial values (u, u', ..., u^(m-1)) at xs[0].
    xs : Sequence[float]
        Strictly increasing sample points.
    log_budget : float
        Largest log-growth allowed between two renormalizations.

    Raises
    ------
    StiffnessFailure
        When the step size collapses or the state leaves the float range.
    """
    rhs, rate = companion_system(P)
    state = np.asarray(seed, dtype=complex)
    if state.shape != (P.order,):
        raise ValueError(f"a seed needs {P.order} initial values")
    norm = np.linalg.norm(state)
    if norm == 0:
        raise ValueError("the zero seed has no growth")
    state, log_scale = state / norm, float(np.log(norm))
    x = float(xs[0])
    logs = []
    for target in xs:
        while x < target:
            piece = min(MAX_PIECE, log_budget / (1 + rate(x)))
            piece = min(piece, log_budget / (1 + rate(x + piece)))
            stop = min(float(target), x + piece)
            solution = solve_ivp(rhs, (x, stop), state, method="DOP853", rtol=rtol, atol=atol)
            if solution.status != 0:
                raise StiffnessFailure(f"integration stopped at x = {solution.t[-1]:.6g}: {solution.message}")
            state = solution.y[:, -1]
            norm = np.linalg.norm(state)
            if not np.isfinite(norm) or norm == 0:
                raise StiffnessFailure(f"state left the float range at x = {stop:.6g}")
            state, log_scale, x = state / norm, log_scale + float(np.log(norm)), stop
        magnitude = abs(state[0])
        logs.append(log_scale + float(np.log(magnitude)) if magnitude else float("-inf"))
    return logs


def default_seeds(order: int) -> list[list[complex]]:
    """The basis e_0, e_0 + e_1, ..., e_0 + e_(m-1): every seed has u(x0) = 1."""
    seeds = []
    for j in range(order):
        seed = [0j] * order
        seed[0] = 1 + 0j
        if j:
            seed[j] = 1 + 0j
        seeds.append(seed)
    return seeds


def solve_operator_equation(
    P: DiffOperator,
    span: tuple[float, float] = (1.0, 100.0),
    seeds: Sequence[Sequence[complex]] | None = None,
    points: int = DEFAULT_POINTS,
    log_budget: float = LOG_BUDGET,
) -> list[GrowthSample]:
    """
    Solve P u = 0 for a basis of initial conditions and sample log|u|.

    Parameters
    ----------
    P : DiffOperator
        Operator of order m >= 1.
    span : tuple[float, float]
        Integration interval inside [1, 1e4]; its start is moved past the real zeros of the leading coefficient.
    seeds : Sequence[Sequence[complex]] | None
        Initial values at the start of the span; `default_seeds` when omitted.
    points : int
        Number of geometric sample points.
    log_budget : float
        Largest log-growth between two renormalizations.

    Returns
    -------
    list[GrowthSample]
        One sample per seed; failed integrations give samples marked unusable.

    Raises
    ------
    LeadingCoeffVanishes
        When no admissible part of the span is left.
    """
    if span[0] < SPAN_LIMIT[0] or span[1] > SPAN_LIMIT[1] or span[0] >= span[1]:
        raise ValueError(f"span must be an interval inside {list(SPAN_LIMIT)}")
    start, stop = admissible_span(P, span)
    xs = tuple(np.geomspace(start, stop, points).tolist())
    samples = []
    for index, seed in enumerate(seeds if seeds is not None else default_seeds(P.order)):
        try:
            logs = integrate_seed(P, seed, xs, log_budget=log_budget)
        except StiffnessFailure as e:
            logger.warning("seed %d of %r: %s", index, P, e)
            samples.append(GrowthSample(xs=xs, log_abs_u=(float("nan"),) * len(xs), usable=False, note=str(e)))
            continue
        samples.append(GrowthSample(xs=xs, log_abs_u=tuple(logs), note=f"solution for seed {index}"))
    return samples
