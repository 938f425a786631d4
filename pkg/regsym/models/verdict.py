"""Records produced by the regularity engine.

This module provides:
- Decision, DecisionPath and SymbolClass: the enumerations a verdict is made of.
- Classification: result of the exact fast-path classifiers.
- SeparationPair / SeparationReport: the separation hypothesis, pair by pair, for one direction.
- BranchCondition / ConditionReport: the imaginary-growth condition, branch by branch.
- Verdict: the decision record returned by `regsym.regularity.decide.decide`.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, field_serializer
from sympy import Rational

from regsym.models.options import Direction, Tolerances
from regsym.models.types import ComplexValue, RationalValue


class Decision(str, Enum):
    REGULAR = "Regular"
    NOT_REGULAR = "NotRegular"
    INCONCLUSIVE = "Inconclusive"

    @property
    def exit_code(self) -> int:
        """Process exit code of the CLI for this decision."""
        return {Decision.REGULAR: 0, Decision.NOT_REGULAR: 1, Decision.INCONCLUSIVE: 2}[self]


class SymbolClass(str, Enum):
    CONSTANT_COEFFICIENT = "ConstantCoefficient"
    GLOBALLY_ELLIPTIC = "GloballyElliptic"
    QUASI_ELLIPTIC = "QuasiElliptic"
    SG_ELLIPTIC = "SGElliptic"
    QUASI_ELLIPTIC_EXCHANGED = "QuasiEllipticExchanged"
    GENERAL = "General"


class DecisionPath(str, Enum):
    CONSTANT_COEFFICIENT = "ConstantCoefficient"
    GLOBALLY_ELLIPTIC = "GloballyElliptic"
    QUASI_ELLIPTIC = "QuasiElliptic"
    SG_ELLIPTIC = "SGElliptic"
    QUASI_ELLIPTIC_EXCHANGED = "QuasiEllipticExchanged"
    THEOREM_GENERAL = "TheoremGeneral"


class Classification(BaseModel):
    """Outcome of the exact classifiers.

    Attributes
    ----------
    symbol_class : SymbolClass
        First matching class, `GENERAL` when none matches.
    q : Rational | None
        Quasi-homogeneity exponent of the two quasi-elliptic classes.
    m : int | None
        xi-degree (SG class) or total degree (other classes).
    n : int | None
        x-degree of an SG-elliptic symbol.
    regular : bool | None
        The regularity the class implies; None for `GENERAL`.
    notes : tuple[str, ...]
        Why the class matched or which classes were ruled out.
    """

    model_config = ConfigDict(frozen=True)

    symbol_class: SymbolClass
    q: RationalValue | None = None
    m: int | None = None
    n: int | None = None
    regular: bool | None = None
    notes: tuple[str, ...] = ()

    @property
    def path(self) -> DecisionPath | None:
        """The fast path this class decides on, if any."""
        if self.symbol_class is SymbolClass.GENERAL:
            return None
        return DecisionPath(self.symbol_class.value)


class PairStatus(str, Enum):
    SEPARATED = "Separated"
    FAILS = "Fails"
    NOT_APPLICABLE = "NotApplicable"


class SeparationPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    j: int
    k: int
    slope: ComplexValue
    status: PairStatus
    difference_exponent: RationalValue | None = None
    deviation_exponents: tuple[RationalValue | None, RationalValue | None] = (None, None)
    coefficients: tuple[ComplexValue, ComplexValue] | None = None


class SeparationReport(BaseModel):
    """Separation hypothesis for the branches of one direction.

    Attributes
    ----------
    direction : Direction
        Direction of the branch set.
    pairs : tuple[SeparationPair, ...]
        Every pair j < k; only pairs sharing a real leading slope are Separated or Fails.
    borderline : tuple[int, ...]
        Branches whose leading slope is too close to the real axis to call.
    notes : tuple[str, ...]
        Reading notes (index versus exponent threshold, decaying deviations).
    """

    model_config = ConfigDict(frozen=True)

    direction: Direction
    pairs: tuple[SeparationPair, ...] = ()
    borderline: tuple[int, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def separated(self) -> bool:
        """Whether no pair fails and no slope is borderline."""
        return not self.borderline and all(pair.status is not PairStatus.FAILS for pair in self.pairs)

    def failing(self) -> list[SeparationPair]:
        """Pairs that violate the hypothesis."""
        return [pair for pair in self.pairs if pair.status is PairStatus.FAILS]


class ConditionStatus(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    BOUNDARY = "Boundary"


class BranchCondition(BaseModel):
    model_config = ConfigDict(frozen=True)

    branch: int
    direction: Direction
    status: ConditionStatus
    witness_exponent: RationalValue | None = None
    witness_coefficient: ComplexValue | None = None


class ConditionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: tuple[BranchCondition, ...] = ()

    @property
    def holds(self) -> bool:
        """Whether every branch holds in every direction."""
        return all(entry.status is ConditionStatus.HOLDS for entry in self.entries)

    @property
    def boundary(self) -> tuple[BranchCondition, ...]:
        """Entries whose first imaginary term sits exactly at x^-1."""
        return tuple(entry for entry in self.entries if entry.status is ConditionStatus.BOUNDARY)


class Verdict(BaseModel):
    """Decision record.

    Attributes
    ----------
    decision : Decision
        Regular, NotRegular or Inconclusive.
    path : DecisionPath | None
        Fast path or theorem path that produced the decision; None when the engine failed before either finished.
    classification : Classification | None
        Classifier outcome for the symbol as given.
    shear : Rational
        Shear parameter applied before expanding (0 when none was needed).
    separation : tuple[SeparationReport, ...]
        One report per expanded direction.
    condition : ConditionReport | None
        Imaginary-growth condition on every branch, when the theorem path ran.
    diagnostics : tuple[str, ...]
        Notes explaining an Inconclusive verdict, boundary cases and cross-check disagreements.
    tolerances : Tolerances
        Tolerances in effect.
    """

    model_config = ConfigDict(frozen=True)

    decision: Decision
    path: DecisionPath | None = None
    classification: Classification | None = None
    shear: RationalValue = Rational(0)
    separation: tuple[SeparationReport, ...] = ()
    condition: ConditionReport | None = None
    diagnostics: tuple[str, ...] = ()
    tolerances: Tolerances

    @field_serializer("tolerances", when_used="json")
    def _tolerances_as_strings(self, tolerances: Tolerances) -> dict[str, str]:
        return tolerances.as_strings()

    @property
    def exit_code(self) -> int:
        """CLI exit code for the decision."""
        return self.decision.exit_code
