"""Numerical corroboration of verdicts.

A NotRegular verdict is corroborated by the closed-form witness of a branch that fails the growth condition: it must be
polynomially bounded, i.e. a tempered solution that is not Schwartz. A Regular verdict of a first-order operator is
corroborated by integrating its only solution, which must not be polynomially bounded. Regular verdicts of higher order
are reported without assertion: a finite basis can mix decaying and growing solutions.
"""

import logging
from collections.abc import Sequence

import numpy as np

from regsym.algebra.bivariate import BivariatePoly
from regsym.algebra.operators import DiffOperator
from regsym.algebra.quantization import left_from_weyl
from regsym.errors import InsufficientRange, LeadingCoeffVanishes
from regsym.models.branches import BranchSet
from regsym.models.growth import GrowthSample, OracleObservation, OracleReport, OracleStatus
from regsym.models.options import Direction, EngineOptions
from regsym.models.verdict import ConditionStatus, Decision, Verdict
from regsym.oracle.growth import growth_exponent
from regsym.oracle.integrate import solve_operator_equation
from regsym.oracle.witness import counterexample_solution, default_grid
from regsym.regularity.decide import Analysis, analyze

logger = logging.getLogger(__name__)


def point_reflection(p: BivariatePoly) -> BivariatePoly:
    """Return p(-x, -xi), the Weyl symbol of the operator rewritten in t = -x."""
    return BivariatePoly.from_terms({(a, b): -c if (a + b) % 2 else c for (a, b), c in p.terms.items()})


def operator_in_direction(symbol: BivariatePoly, direction: Direction) -> DiffOperator:
    """The operator with Weyl symbol `symbol`, written in x (plus) or in t = -x (minus)."""
    weyl = point_reflection(symbol) if direction is Direction.MINUS else symbol
    return DiffOperator.from_left_symbol(left_from_weyl(weyl))


def _observe(source: str, direction: Direction, sample: GrowthSample, slope_cap: float) -> OracleObservation:
    try:
        growth = growth_exponent(sample, slope_cap=slope_cap)
    except InsufficientRange as e:
        return OracleObservation(source=source, direction=direction, note=str(e))
    return OracleObservation(source=source, direction=direction, growth=growth)


def _failing_branch(verdict: Verdict, analysis: Analysis) -> tuple[BranchSet, int] | None:
    condition = verdict.condition or analysis.verdict.condition
    if condition is None:
        return None
    for entry in condition.entries:
        if entry.status is ConditionStatus.HOLDS:
            continue
        for branches in analysis.branch_sets:
            if branches.direction is entry.direction:
                return branches, entry.branch
    return None


def _check_witness(
    verdict: Verdict, analysis: Analysis, grid: Sequence[float], options: EngineOptions
) -> OracleReport:
    found = _failing_branch(verdict, analysis)
    if found is None:
        return OracleReport(status=OracleStatus.SKIPPED, notes=("no expanded branch fails the growth condition",))
    branches, index = found
    tolerances = options.tolerances
    witness = counterexample_solution(branches.branches[index], grid, im_tol=tolerances.im_tol)
    observation = _observe(f"witness of branch {index}", branches.direction, witness, tolerances.slope_cap)
    observations = [observation]
    notes = []
    difference = None
    if analysis.normalized is not None and analysis.normalized.xi_degree == 1:
        try:
            operator = operator_in_direction(analysis.normalized, branches.direction)
            (solution,) = solve_operator_equation(operator, (grid[0], grid[-1]), points=len(grid))
        except LeadingCoeffVanishes as e:
            notes.append(f"integration skipped: {e}")
        else:
            observations.append(_observe("solution for seed 0", branches.direction, solution, tolerances.slope_cap))
            if solution.usable and solution.xs == witness.xs:
                gaps = np.abs(np.subtract(solution.log_abs_u, witness.log_abs_u))
                difference = float(np.max(gaps))
    if observation.growth is None:
        status = OracleStatus.SKIPPED
        notes.append("the witness could not be classified")
    elif observation.growth.tempered:
        status = OracleStatus.CONSISTENT
        notes.append("the witness is a tempered solution that is not Schwartz")
    else:
        status = OracleStatus.INCONSISTENT
        notes.append(f"the witness shows {observation.growth.label.value}, a tempered solution was expected")
    return OracleReport(
        status=status, observations=tuple(observations), max_log_difference=difference, notes=tuple(notes)
    )


def _check_solutions(symbol: BivariatePoly, grid: Sequence[float], options: EngineOptions) -> OracleReport:
    observations = []
    notes = []
    for direction in Direction:
        try:
            samples = solve_operator_equation(
                operator_in_direction(symbol, direction), (grid[0], grid[-1]), points=len(grid)
            )
        except LeadingCoeffVanishes as e:
            notes.append(f"{direction.value}: {e}")
            continue
        for index, sample in enumerate(samples):
            observations.append(_observe(f"solution for seed {index}", direction, sample, options.tolerances.slope_cap))

    classified = [o for o in observations if o.growth is not None]
    if symbol.xi_degree > 1:
        notes.append("higher order: observations only, a finite basis can hide decaying solutions")
        status = OracleStatus.ADVISORY if classified else OracleStatus.SKIPPED
    elif not classified:
        status = OracleStatus.SKIPPED
    elif any(o.growth.tempered for o in classified):
        status = OracleStatus.INCONSISTENT
        notes.append("a polynomially bounded solution contradicts the Regular verdict")
    else:
        status = OracleStatus.CONSISTENT
    return OracleReport(status=status, observations=tuple(observations), notes=tuple(notes))


def cross_validate(
    p: BivariatePoly,
    verdict: Verdict,
    options: EngineOptions | None = None,
    analysis: Analysis | None = None,
    xs: Sequence[float] | None = None,
) -> OracleReport:
    """
    Check a verdict against numerical solutions.

    Parameters
    ----------
    p : BivariatePoly
        The symbol the verdict was computed for.
    verdict : Verdict
        Output of `regsym.regularity.decide.decide` for `p` and `options`.
    options : EngineOptions | None
        The options used for the verdict; defaults when omitted.
    analysis : Analysis | None
        A pipeline run with branch expansions; recomputed (with the fast path expanded) when omitted.
    xs : Sequence[float] | None
        Sample grid; 64 geometric points on [1, 100] when omitted.

    Returns
    -------
    OracleReport
        Never raises for engine failures; those are reported as Skipped.
    """
    options = options or EngineOptions()
    if verdict.decision is Decision.INCONCLUSIVE:
        return OracleReport(status=OracleStatus.SKIPPED, notes=("nothing to corroborate for an Inconclusive verdict",))
    stale = analysis is None or analysis.normalized is None
    if stale or (not analysis.branch_sets and verdict.decision is Decision.NOT_REGULAR):
        analysis = analyze(p, options, expand_fast_path=True)
    if analysis.normalized is None or analysis.normalized.xi_degree == 0:
        return OracleReport(status=OracleStatus.SKIPPED, notes=("the symbol has no branches in xi",))
    grid = default_grid() if xs is None else tuple(xs)
    if verdict.decision is Decision.NOT_REGULAR:
        report = _check_witness(verdict, analysis, grid, options)
    else:
        report = _check_solutions(analysis.normalized, grid, options)
    if analysis.shear:
        note = f"checked after the shear x -> x + {analysis.shear} xi"
        report = report.model_copy(update={"notes": (*report.notes, note)})
    logger.debug("oracle for %s: %s", p, report.status.value)
    return report
