"""Separation hypothesis on the branches of one direction.

Two branches sharing a real leading slope lambda are separated when the leading terms of their deviations
xi_j - lambda*x differ as monomials and the larger deviation exponent exceeds -1. A deviation that vanishes to the
truncation counts as exponent -inf. Branches the engine reported as coincident at depth always fail.
"""

import logging
from itertools import combinations

from sympy import Rational

from regsym.models.branches import BranchSet, PuiseuxSeries
from regsym.models.options import Tolerances
from regsym.models.verdict import PairStatus, SeparationPair, SeparationReport
from regsym.puiseux.series import difference_exponent

logger = logging.getLogger(__name__)

CRITICAL_EXPONENT = Rational(-1)

# |Im lambda| within this factor of lambda_tol is too close to call
BORDERLINE_FACTOR = 100


def is_real_slope(slope: complex, tolerances: Tolerances) -> bool:
    """Whether a leading slope counts as real."""
    return abs(slope.imag) <= tolerances.lambda_tol


def is_borderline_slope(slope: complex, tolerances: Tolerances) -> bool:
    """Whether |Im lambda| is just above the tolerance, where neither reading can be trusted."""
    return tolerances.lambda_tol < abs(slope.imag) <= BORDERLINE_FACTOR * tolerances.lambda_tol


def same_slope(a: complex, b: complex, tolerances: Tolerances) -> bool:
    """Whether two leading slopes agree within the slope tolerance."""
    return abs(a - b) <= tolerances.lambda_tol * (1 + abs(a))


def _deviation_exponent(branch: PuiseuxSeries) -> Rational | None:
    leading = branch.leading_deviation()
    return None if leading is None else leading.exponent


def _compare_pair(branches: BranchSet, j: int, k: int, tolerances: Tolerances) -> tuple[SeparationPair, list[str]]:
    a, b = branches.branches[j], branches.branches[k]
    slope = a.slope
    exponents = (_deviation_exponent(a), _deviation_exponent(b))
    notes: list[str] = []
    common = SeparationPair(j=j, k=k, slope=slope, status=PairStatus.FAILS, deviation_exponents=exponents)

    if branches.coincident(j, k):
        return common, [f"branches {j} and {k} coincide down to x^{branches.depth}"]
    difference = difference_exponent(a, b, branches.depth, tolerances.cluster_tol)
    if difference is None:
        return common, [f"branches {j} and {k} are the same exact root"]
    common = common.model_copy(update={"difference_exponent": difference})
    if difference <= branches.depth:
        return common, [f"branches {j} and {k} agree down to x^{branches.depth}"]

    largest = max((e for e in exponents if e is not None), default=None)
    # the deviations differ as monomials iff xi_j - xi_k starts at the larger deviation exponent
    differ = largest is not None and difference == largest
    coefficients = (a.coefficient_at(difference), b.coefficient_at(difference))
    common = common.model_copy(update={"coefficients": coefficients})
    if not differ:
        notes.append(f"branches {j} and {k} share the leading deviation term; they split at x^{difference}")
        return common, notes
    if largest <= CRITICAL_EXPONENT:
        notes.append(
            f"branches {j} and {k} approach lambda*x like x^{largest} (<= x^-1): tempered non-Schwartz solutions are "
            "expected but the separation hypothesis does not hold"
        )
        return common, notes
    ramification = max(a.ramification, b.ramification, 1)
    if largest <= Rational(-1, ramification):
        notes.append(
            f"pair ({j}, {k}) separates at x^{largest}: reading the -1 threshold as a term index would reject it"
        )
    return common.model_copy(update={"status": PairStatus.SEPARATED}), notes


def check_separation(branches: BranchSet, tolerances: Tolerances | None = None) -> SeparationReport:
    """
    Check the separation hypothesis for every pair of branches of one direction.

    Parameters
    ----------
    branches : BranchSet
        Output of `expand_branches` at depth <= -1.
    tolerances : Tolerances | None
        Slope and clustering tolerances; defaults when omitted.

    Returns
    -------
    SeparationReport
        All pairs j < k; pairs not sharing a real slope are NotApplicable.
    """
    tolerances = tolerances or Tolerances()
    series = branches.branches
    borderline = tuple(j for j, s in enumerate(series) if is_borderline_slope(s.slope, tolerances))
    pairs: list[SeparationPair] = []
    notes: list[str] = []
    for j, k in combinations(range(len(series)), 2):
        a, b = series[j].slope, series[k].slope
        if not (is_real_slope(a, tolerances) and is_real_slope(b, tolerances) and same_slope(a, b, tolerances)):
            pairs.append(SeparationPair(j=j, k=k, slope=a, status=PairStatus.NOT_APPLICABLE))
            continue
        pair, pair_notes = _compare_pair(branches, j, k, tolerances)
        pairs.append(pair)
        notes.extend(pair_notes)
    if borderline:
        notes.append(f"leading slopes of branches {list(borderline)} are too close to the real axis to classify")
    report = SeparationReport(
        direction=branches.direction, pairs=tuple(pairs), borderline=borderline, notes=tuple(notes)
    )
    logger.debug("separation at %s: %s", branches.direction.value, "ok" if report.separated else "fails")
    return report
