"""Roots of edge polynomials with multiplicities.

Exact edge polynomials are factored over QQ_I: linear factors give exact roots, higher-degree irreducible factors
are solved numerically (their roots are simple). Numeric edge polynomials go through mpmath's Durand-Kerner
`polyroots`; roots closer than the cluster tolerance are merged and refined as simple roots of the derivative of the
right order. Every numeric root is certified by its residual.
"""

import logging
from typing import Any, NamedTuple

from mpmath import MPContext
from sympy.polys.domains import QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.errors import PrecisionExhausted
from regsym.models.options import Tolerances
from regsym.puiseux.fractional import Coefficient, coefficient_to_complex, gaussian_to_mpc, to_mpc
from regsym.puiseux.newton_polygon import PolygonEdge

logger = logging.getLogger(__name__)

MAX_STEPS = 400


class EdgeRoot(NamedTuple):
    value: Coefficient
    multiplicity: int

    @property
    def exact(self) -> bool:
        """Whether the root is an exact Gaussian rational."""
        return isinstance(self.value, GaussianRational)


def _sort_key(root: EdgeRoot) -> tuple[float, float]:
    value = coefficient_to_complex(root.value)
    return (round(value.real, 12), round(value.imag, 12))


def _derivative(coeffs: list[Any]) -> list[Any]:
    """Derivative of a polynomial given by descending coefficients."""
    degree = len(coeffs) - 1
    return [c * (degree - k) for k, c in enumerate(coeffs[:-1])]


def _newton(ctx: MPContext, coeffs: list[Any], start: Any, steps: int = 60) -> Any:  # noqa: ANN401
    derivative = _derivative(coeffs)
    z = start
    for _ in range(steps):
        slope = ctx.polyval(derivative, z)
        if not slope:
            break
        step = ctx.polyval(coeffs, z) / slope
        z -= step
        if abs(step) <= ctx.eps * (1 + abs(z)):
            break
    return z


def _polyroots(ctx: MPContext, coeffs: list[Any]) -> list[Any]:
    for attempt in range(3):
        try:
            return ctx.polyroots(coeffs, maxsteps=MAX_STEPS * 4**attempt, extraprec=ctx.prec * 2**attempt)
        except ctx.NoConvergence:
            logger.debug("polyroots did not converge on attempt %d", attempt + 1)
    raise PrecisionExhausted(f"edge polynomial roots did not converge (degree {len(coeffs) - 1})")


def _cluster(roots: list[Any], cluster_tol: float) -> list[list[Any]]:
    clusters: list[list[Any]] = []
    for root in roots:
        for cluster in clusters:
            center = sum(cluster) / len(cluster)
            if abs(root - center) <= cluster_tol * (1 + abs(center)):
                cluster.append(root)
                break
        else:
            clusters.append([root])
    return clusters


def _certify(ctx: MPContext, coeffs: list[Any], root: Any, precision: float) -> None:  # noqa: ANN401
    norm = sum(abs(c) for c in coeffs) * max(1, abs(root)) ** (len(coeffs) - 1)
    residual = abs(ctx.polyval(coeffs, root))
    if residual > precision * norm:
        raise PrecisionExhausted(
            f"root {complex(root):.6g} has residual {float(residual):.3g} above {precision:g} * {float(norm):.3g}"
        )


def numeric_roots(ctx: MPContext, coeffs: list[Any], tolerances: Tolerances) -> list[EdgeRoot]:
    """
    Roots with multiplicities of a polynomial given by descending mpc coefficients.

    Parameters
    ----------
    ctx : MPContext
        Working context.
    coeffs : list
        Descending coefficients, leading and trailing ones nonzero.
    tolerances : Tolerances
        Supplies the cluster tolerance and the certification precision.
    """
    if len(coeffs) == 2:
        root = -coeffs[1] / coeffs[0]
        return [EdgeRoot(root, 1)]
    roots = _polyroots(ctx, coeffs)
    result = []
    for cluster in _cluster(roots, tolerances.cluster_tol):
        center = sum(cluster) / len(cluster)
        order = len(cluster) - 1
        target = coeffs
        for _ in range(order):
            target = _derivative(target)
        refined = _newton(ctx, target, center)
        _certify(ctx, coeffs, refined, tolerances.precision)
        if order:
            logger.debug("merged %d numeric roots near %s", order + 1, complex(refined))
        result.append(EdgeRoot(refined, order + 1))
    return result


def edge_roots(edge: PolygonEdge, ctx: MPContext, tolerances: Tolerances) -> list[EdgeRoot]:
    """
    Return the roots of an edge polynomial with their multiplicities, in a deterministic order.

    Parameters
    ----------
    edge : PolygonEdge
        Edge of a Newton polygon.
    ctx : MPContext
        Context for numeric roots.
    tolerances : Tolerances
        Numeric thresholds.
    """
    roots: list[EdgeRoot] = []
    if edge.exact:
        _, factors = edge.as_poly().factor_list()
        for factor, multiplicity in factors:
            rep = factor.as_dict(native=True)
            degree = factor.degree()
            descending = [rep.get((degree - k,), QQ_I.zero) for k in range(degree + 1)]
            if degree == 1:
                roots.append(EdgeRoot(-descending[1] / descending[0], multiplicity))
                continue
            descending = [gaussian_to_mpc(ctx, c) for c in descending]
            roots.extend(EdgeRoot(root.value, multiplicity) for root in numeric_roots(ctx, descending, tolerances))
    else:
        descending = [to_mpc(ctx, c) for c in reversed(edge.coefficients)]
        roots = numeric_roots(ctx, descending, tolerances)
    found = sum(root.multiplicity for root in roots)
    if found != edge.length:
        raise PrecisionExhausted(f"edge of slope {edge.slope} has {edge.length} roots, found {found}")
    return sorted(roots, key=_sort_key)
