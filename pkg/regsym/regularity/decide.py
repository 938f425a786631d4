"""The decision pipeline.

This module provides:
- first_correction: the constant term of a branch with a simple real slope, read directly off the symbol.
- expand_directions: branch expansions for every requested direction, optionally on a thread pool.
- theorem_decision: the general path (separation, then the imaginary-growth condition).
- analyze: the whole pipeline, returning every intermediate result for reports.
- decide: the verdict alone.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly
from regsym.algebra.normalization import homogeneous_part, normalize_leading, reflect
from regsym.algebra.quantization import weyl_from_left
from regsym.errors import RegsymError, ZeroPolynomial
from regsym.models.branches import BranchSet
from regsym.models.options import Direction, EngineOptions, Quantization
from regsym.models.verdict import (
    Classification,
    ConditionReport,
    Decision,
    DecisionPath,
    SeparationReport,
    Verdict,
)
from regsym.puiseux.expansion import expand_branches
from regsym.regularity.classify import classify
from regsym.regularity.condition import check_condition
from regsym.regularity.separation import check_separation, is_real_slope

logger = logging.getLogger(__name__)

CROSS_CHECK_TOL = 1e-6


class Analysis(NamedTuple):
    symbol: BivariatePoly
    normalized: BivariatePoly | None
    shear: Rational
    classification: Classification | None
    branch_sets: tuple[BranchSet, ...]
    verdict: Verdict


class TheoremOutcome(NamedTuple):
    decision: Decision
    separation: tuple[SeparationReport, ...]
    condition: ConditionReport
    diagnostics: tuple[str, ...]


def weyl_symbol(p: BivariatePoly, quantization: Quantization) -> BivariatePoly:
    """Read the input as a Weyl symbol, converting a left symbol first."""
    return weyl_from_left(p) if quantization is Quantization.LEFT else p


def first_correction(p: BivariatePoly, slope: complex, tol: float = 1e-8) -> complex | None:
    """
    Constant term c of a branch xi = slope*x + c + O(1/x) of a normalized symbol.

    Only defined when `slope` is a simple root of p_m(1, .): c = -p_(m-1)(1, slope) / (d_xi p_m)(1, slope).
    Returns None at multiple roots.
    """
    m = p.degree
    principal = homogeneous_part(p, m)
    derivative = principal.diff_xi().evaluate(1, slope)
    scale = sum(abs(c) for _, _, c in principal.numeric_terms) * max(1.0, abs(slope)) ** m
    if abs(derivative) <= tol * scale:
        return None
    return -homogeneous_part(p, m - 1).evaluate(1, slope) / derivative


def correction_diagnostics(p: BivariatePoly, branches: BranchSet, options: EngineOptions) -> list[str]:
    """Compare the engine's constant terms with `first_correction` on every simple real slope."""
    symbol = reflect(p) if branches.direction is Direction.MINUS else p
    notes = []
    for index, branch in enumerate(branches.branches):
        if not is_real_slope(branch.slope, options.tolerances):
            continue
        expected = first_correction(symbol, branch.slope, options.tolerances.cluster_tol)
        if expected is None:
            continue
        found = branch.coefficient_at(Rational(0))
        if abs(found - expected) > CROSS_CHECK_TOL * (1 + abs(expected)):
            notes.append(
                f"branch {index} at {branches.direction.value}: constant term {found:.6g} differs from the "
                f"first-order prediction {expected:.6g}"
            )
    return notes


def expand_directions(p: BivariatePoly, options: EngineOptions) -> tuple[BranchSet, ...]:
    """
    Expand a normalized symbol in every direction of `options`.

    Parameters
    ----------
    p : BivariatePoly
        Normalized symbol.
    options : EngineOptions
        Directions, depth, tolerances, residual grid and worker count.
    """

    def expand(direction: Direction) -> BranchSet:
        return expand_branches(
            p,
            direction,
            depth_exponent=options.depth,
            tolerances=options.tolerances,
            residual_xs=options.residual_xs,
        )

    if options.workers > 1 and len(options.directions) > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as executor:
            return tuple(executor.map(expand, options.directions))
    return tuple(expand(direction) for direction in options.directions)


def theorem_decision(p: BivariatePoly, branch_sets: tuple[BranchSet, ...], options: EngineOptions) -> TheoremOutcome:
    """
    Decide on the general path from the branch expansions.

    Regular needs separation in both directions and the condition on every branch; NotRegular needs separation and a
    failing (or boundary) branch. Everything else is Inconclusive.
    """
    tolerances = options.tolerances
    separation = tuple(check_separation(branches, tolerances) for branches in branch_sets)
    condition = check_condition(branch_sets, tolerances)
    diagnostics = [note for report in separation for note in report.notes]
    for branches in branch_sets:
        diagnostics.extend(correction_diagnostics(p, branches, options))

    uncertified = [
        f"{branches.direction.value} branch {certificate.branch}"
        for branches in branch_sets
        for certificate in branches.residual_certificates
        if not certificate.passed
    ]
    if uncertified:
        diagnostics.append(f"residual certificate failed for {', '.join(uncertified)}")
        decision = Decision.INCONCLUSIVE
    elif {branches.direction for branches in branch_sets} != set(Direction):
        diagnostics.append("the theorem needs expansions in both directions")
        decision = Decision.INCONCLUSIVE
    elif not all(report.separated for report in separation):
        diagnostics.append("separation fails: the theorem does not apply")
        decision = Decision.INCONCLUSIVE
    elif condition.holds:
        decision = Decision.REGULAR
    else:
        decision = Decision.NOT_REGULAR
        for entry in condition.boundary:
            diagnostics.append(
                f"boundary: branch {entry.branch} at {entry.direction.value} has its first imaginary term at x^-1, "
                "so x * Im xi stays bounded"
            )
    return TheoremOutcome(decision, separation, condition, tuple(diagnostics))


def _failure(p: BivariatePoly, options: EngineOptions, error: RegsymError, **fields: object) -> Verdict:
    logger.warning("engine failed on %s: %s", p, error)
    return Verdict(
        decision=Decision.INCONCLUSIVE,
        diagnostics=(f"{type(error).__name__}: {error}",),
        tolerances=options.tolerances,
        **fields,
    )


def analyze(p: BivariatePoly, options: EngineOptions | None = None, expand_fast_path: bool = False) -> Analysis:
    """
    Run the decision pipeline and keep every intermediate result.

    Parameters
    ----------
    p : BivariatePoly
        Nonzero symbol, read as a Weyl or left symbol according to `options.quantization`.
    options : EngineOptions | None
        Engine options; defaults when omitted.
    expand_fast_path : bool
        Also expand branches (and run the general path as a cross-check) when an exact classifier decides.

    Returns
    -------
    Analysis
        The Weyl symbol, normalized symbol and shear, classification, branch sets and verdict. Engine errors become an
        Inconclusive verdict.

    Raises
    ------
    ZeroPolynomial
        When the symbol is zero.
    """
    options = options or EngineOptions()
    symbol = weyl_symbol(p, options.quantization)
    if symbol.is_zero:
        raise ZeroPolynomial("the symbol is zero: every function solves P u = 0")

    classification = classify(symbol)
    fast_path = classification.path
    fast_verdict = None
    if fast_path is not None:
        decision = Decision.REGULAR if classification.regular else Decision.NOT_REGULAR
        fast_verdict = Verdict(
            decision=decision,
            path=fast_path,
            classification=classification,
            diagnostics=classification.notes,
            tolerances=options.tolerances,
        )
        if not expand_fast_path:
            return Analysis(symbol, None, Rational(0), classification, (), fast_verdict)

    normalized, lam = normalize_leading(symbol)
    if normalized.xi_degree == 0:
        # a nonzero constant symbol has no branches; the constant-coefficient class already decided it
        verdict = fast_verdict or _failure(p, options, ZeroPolynomial("the symbol has no xi dependence"))
        return Analysis(symbol, normalized, lam, classification, (), verdict)
    try:
        branch_sets = expand_directions(normalized, options)
        outcome = theorem_decision(normalized, branch_sets, options)
    except RegsymError as e:
        if fast_verdict is not None:
            notes = (*fast_verdict.diagnostics, f"general path failed: {e}")
            verdict = fast_verdict.model_copy(update={"diagnostics": notes})
            return Analysis(symbol, normalized, lam, classification, (), verdict)
        verdict = _failure(p, options, e, classification=classification, shear=lam)
        return Analysis(symbol, normalized, lam, classification, (), verdict)

    if fast_verdict is not None:
        notes = list(fast_verdict.diagnostics)
        if outcome.decision is not Decision.INCONCLUSIVE and outcome.decision is not fast_verdict.decision:
            notes.append(f"the general path decides {outcome.decision.value}")
        verdict = fast_verdict.model_copy(
            update={
                "shear": lam,
                "separation": outcome.separation,
                "condition": outcome.condition,
                "diagnostics": tuple(notes),
            }
        )
    else:
        verdict = Verdict(
            decision=outcome.decision,
            path=DecisionPath.THEOREM_GENERAL,
            classification=classification,
            shear=lam,
            separation=outcome.separation,
            condition=outcome.condition,
            diagnostics=outcome.diagnostics,
            tolerances=options.tolerances,
        )
    logger.debug("%s: %s via %s", p, verdict.decision.value, verdict.path.value if verdict.path else None)
    return Analysis(symbol, normalized, lam, classification, branch_sets, verdict)


def decide(p: BivariatePoly, options: EngineOptions | None = None) -> Verdict:
    """
    Decide global regularity of the operator with symbol `p`.

    Parameters
    ----------
    p : BivariatePoly
        Nonzero symbol.
    options : EngineOptions | None
        Quantization of the input, directions, depth and tolerances.

    Raises
    ------
    ZeroPolynomial
        When the symbol is zero.
    """
    return analyze(p, options).verdict
