"""Newton-Puiseux expansion of all roots xi_j(x) of a normalized symbol as x -> +inf or x -> -inf.

The recursion works on p(x, prefix(x) + xi): at each level the Newton polygon edges with slope below the last
exponent describe the roots of the cluster being refined, every root c of an edge polynomial extends the prefix by
c x^slope, and a root of multiplicity k is refined again as a cluster of k branches. Roots xi = 0 of the shifted
polynomial are exact terminations. Edges at or below the depth end the expansion; branches that still coincide
there are reported as unseparated.
"""

import logging
from collections.abc import Sequence
from typing import NamedTuple

from mpmath import MPContext
from sympy import Rational
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.algebra.bivariate import BivariatePoly
from regsym.algebra.normalization import reflect
from regsym.errors import NotAPolynomialInXi, PrecisionExhausted
from regsym.models.branches import BranchSet, PuiseuxSeries
from regsym.models.options import Direction, Tolerances, default_residual_xs
from regsym.puiseux.fractional import Coefficient, FractionalPoly, coefficient_to_complex, numeric_context
from regsym.puiseux.newton_polygon import polygon_edges
from regsym.puiseux.roots import edge_roots
from regsym.puiseux.series import residual_certificate

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = Rational(-9, 4)


class RawBranch(NamedTuple):
    terms: tuple[tuple[Rational, Coefficient], ...]
    truncation: Rational | None
    group: int | None


class BranchExpander:
    """Recursive Newton-Puiseux engine for one symbol and one direction.

    Attributes
    ----------
    depth : Rational
        Terms with exponent above `depth` are computed.
    tolerances : Tolerances
        Numeric thresholds.
    ctx : MPContext
        Private mpmath context for numeric coefficients.

    Methods
    -------
    expand(p) -> list[RawBranch]
        All branches of `p` at +inf.
    """

    def __init__(self, depth: Rational, tolerances: Tolerances, ctx: MPContext | None = None) -> None:
        self.depth = depth
        self.tolerances = tolerances
        self.ctx = ctx or numeric_context()
        self._groups = 0

    def expand(self, p: BivariatePoly) -> list[RawBranch]:
        """Expand every root of `p` (normalized, positive xi-degree) at +inf."""
        fp = FractionalPoly.from_bivariate(p)
        return self._refine(fp, (), None, fp.xi_degree)

    def _new_group(self) -> int:
        self._groups += 1
        return self._groups

    def _refine(
        self,
        fp: FractionalPoly,
        prefix: tuple[tuple[Rational, Coefficient], ...],
        bound: Rational | None,
        count: int,
    ) -> list[RawBranch]:
        vanishing = fp.xi_min
        if vanishing > count:
            raise PrecisionExhausted(f"{vanishing} vanishing roots in a cluster of {count}")
        edges = [edge for edge in polygon_edges(fp) if bound is None or edge.slope < bound]
        if sum(edge.length for edge in edges) != count - vanishing:
            raise PrecisionExhausted(f"a cluster of {count} roots below x^{bound} did not split consistently")
        deep = sum(edge.length for edge in edges if edge.slope <= self.depth)
        group = self._new_group() if vanishing + deep > 1 else None
        if group is not None:
            logger.debug("%d branches coincide down to x^%s", vanishing + deep, self.depth)
        branches = [RawBranch(prefix, None, group)] * vanishing
        branches += [RawBranch(prefix, self.depth, group)] * deep
        for edge in reversed(edges):
            if edge.slope <= self.depth:
                continue
            for root in edge_roots(edge, self.ctx, self.tolerances):
                shifted = fp.shift(root.value, edge.slope, self.ctx, self.tolerances.zero_tol)
                extended = (*prefix, (edge.slope, root.value))
                branches += self._refine(shifted, extended, edge.slope, root.multiplicity)
        return branches


def _is_normalized(p: BivariatePoly) -> bool:
    return bool(p.coeff(p.degree, 0))


def _to_series(raw: RawBranch, direction: Direction) -> PuiseuxSeries:
    exact = all(isinstance(c, GaussianRational) for _, c in raw.terms)
    return PuiseuxSeries.from_engine(direction, list(raw.terms), raw.truncation, coefficient_to_complex, exact)


def expand_branches(
    p: BivariatePoly,
    direction: Direction,
    depth_exponent: Rational = DEFAULT_DEPTH,
    precision: float | None = None,
    tolerances: Tolerances | None = None,
    residual_xs: Sequence[float] | None = None,
) -> BranchSet:
    """
    Expand all m roots of a normalized symbol in one direction.

    Parameters
    ----------
    p : BivariatePoly
        Normalized symbol (nonzero coefficient of xi^m, m the total degree).
    direction : Direction
        PLUS expands at x -> +inf; MINUS expands reflect(p), i.e. t -> xi_j(-t) as t -> +inf.
    depth_exponent : Rational
        Every term with exponent above this value is computed; must be <= -1.
    precision : float | None
        Overrides `tolerances.precision` for certifying edge polynomial roots.
    tolerances : Tolerances | None
        Numeric thresholds; read from the environment when omitted.
    residual_xs : Sequence[float] | None
        Sample grid for residual certificates; the default grid when omitted.

    Returns
    -------
    BranchSet
        Branches in a deterministic order, residual certificates and unseparated groups.
    """
    depth_exponent = Rational(depth_exponent)
    if depth_exponent > -1:
        raise ValueError(f"depth must be <= -1, got {depth_exponent}")
    if p.is_zero or p.xi_degree == 0:
        raise NotAPolynomialInXi(f"{p} does not depend on xi")
    if not _is_normalized(p):
        raise ValueError(f"{p} is not normalized; apply normalize_leading first")
    tolerances = tolerances or Tolerances.from_env()
    if precision is not None:
        tolerances = tolerances.model_copy(update={"precision": precision})
    target = reflect(p) if direction is Direction.MINUS else p

    raw = BranchExpander(depth_exponent, tolerances).expand(target)
    branches = tuple(_to_series(branch, direction) for branch in raw)
    groups: dict[int, list[int]] = {}
    for index, branch in enumerate(raw):
        if branch.group is not None:
            groups.setdefault(branch.group, []).append(index)
    logger.debug("expanded %d branches of %s at %s", len(branches), p, direction.value)

    xs = tuple(residual_xs) if residual_xs is not None else default_residual_xs()
    certificates = tuple(
        residual_certificate(p, branches, j, depth_exponent, xs, tolerances) for j in range(len(branches))
    )
    return BranchSet(
        symbol=p,
        direction=direction,
        depth=depth_exponent,
        branches=branches,
        residual_certificates=certificates,
        unseparated=tuple(tuple(indices) for indices in groups.values()),
    )
