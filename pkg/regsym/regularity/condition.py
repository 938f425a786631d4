"""Imaginary-growth condition: x * Im xi_j(x) must tend to infinity on every branch in both directions."""

import logging
from collections.abc import Iterable

from sympy import Rational

from regsym.models.branches import BranchSet, PuiseuxSeries
from regsym.models.options import Direction, Tolerances
from regsym.models.verdict import BranchCondition, ConditionReport, ConditionStatus

logger = logging.getLogger(__name__)


def imaginary_witness(branch: PuiseuxSeries, im_tol: float) -> tuple[Rational, complex] | None:
    """Largest exponent whose coefficient has |Im| above `im_tol`, with that coefficient."""
    for term in branch.terms:
        if abs(term.coefficient.imag) > im_tol:
            return term.exponent, term.coefficient
    return None


def branch_condition(branch: PuiseuxSeries, index: int, direction: Direction, im_tol: float) -> BranchCondition:
    """
    Evaluate the condition on one branch.

    Holds when the first imaginary term has exponent above -1, Boundary when it sits exactly at -1 (x * Im xi tends
    to a nonzero constant) and Fails otherwise.
    """
    witness = imaginary_witness(branch, im_tol)
    if witness is None:
        return BranchCondition(branch=index, direction=direction, status=ConditionStatus.FAILS)
    exponent, coefficient = witness
    if exponent > -1:
        status = ConditionStatus.HOLDS
    elif exponent == -1:
        status = ConditionStatus.BOUNDARY
    else:
        status = ConditionStatus.FAILS
    return BranchCondition(
        branch=index,
        direction=direction,
        status=status,
        witness_exponent=exponent,
        witness_coefficient=coefficient,
    )


def check_condition(branch_sets: Iterable[BranchSet], tolerances: Tolerances | None = None) -> ConditionReport:
    """
    Evaluate the imaginary-growth condition on every branch of every given direction.

    Parameters
    ----------
    branch_sets : Iterable[BranchSet]
        Expansions at depth <= -1, normally one per direction.
    tolerances : Tolerances | None
        Supplies `im_tol`; defaults when omitted.
    """
    tolerances = tolerances or Tolerances()
    entries = []
    for branches in branch_sets:
        for index, branch in enumerate(branches.branches):
            entries.append(branch_condition(branch, index, branches.direction, tolerances.im_tol))
    report = ConditionReport(entries=tuple(entries))
    logger.debug("condition: %s", [entry.status.value for entry in entries])
    return report
