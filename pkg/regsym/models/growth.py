"""Records produced by the ODE oracle.

This module provides:
- GrowthSample: log|u| on a strictly increasing grid.
- GrowthLabel / GrowthClass: the growth classification of one sample.
- OracleStatus / OracleObservation / OracleReport: the consistency report of a cross-validation run.
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from regsym.models.options import Direction
from regsym.models.types import Real17

MIN_SAMPLE_POINTS = 16


class GrowthSample(BaseModel):
    """log|u(x)| sampled on a grid.

    Magnitudes are kept in the log domain end to end, so samples of e^(x^2/2) at x = 100 stay representable.

    Attributes
    ----------
    xs : tuple[float, ...]
        Strictly increasing sample points.
    log_abs_u : tuple[float, ...]
        log|u| at every sample point; nan where an integration stopped early.
    usable : bool
        False when the sample came from a failed integration.
    note : str | None
        Why the sample is unusable, or where it came from.
    """

    model_config = ConfigDict(frozen=True)

    xs: tuple[Real17, ...]
    log_abs_u: tuple[Real17, ...]
    usable: bool = True
    note: str | None = None

    @model_validator(mode="after")
    def _check_grid(self) -> "GrowthSample":
        if len(self.xs) < MIN_SAMPLE_POINTS:
            raise ValueError(f"a growth sample needs at least {MIN_SAMPLE_POINTS} points, got {len(self.xs)}")
        if len(self.log_abs_u) != len(self.xs):
            raise ValueError("xs and log_abs_u must have the same length")
        if any(b <= a for a, b in zip(self.xs, self.xs[1:], strict=False)):
            raise ValueError("sample points must be strictly increasing")
        return self


class GrowthLabel(str, Enum):
    RAPID_DECAY = "RapidDecay"
    POLYNOMIAL_BOUNDED = "PolynomialBounded"
    SUPER_POLYNOMIAL = "SuperPolynomialGrowth"


class GrowthClass(BaseModel):
    """Growth classification of a sample.

    Attributes
    ----------
    label : GrowthLabel
        Rapid decay, polynomially bounded or super-polynomial growth.
    slope : float
        Least-squares slope of log|u| against log x; the power of a polynomially bounded sample.
    linear_slope : float
        Least-squares slope of log|u| against x.
    rms : float
        Root mean square residual of the log-log fit.
    points : int
        Number of finite sample values used.
    """

    model_config = ConfigDict(frozen=True)

    label: GrowthLabel
    slope: Real17
    linear_slope: Real17
    rms: Real17
    points: int

    @property
    def tempered(self) -> bool:
        """Whether the sample is polynomially bounded."""
        return self.label is GrowthLabel.POLYNOMIAL_BOUNDED


class OracleStatus(str, Enum):
    CONSISTENT = "Consistent"
    INCONSISTENT = "Inconsistent"
    ADVISORY = "Advisory"
    SKIPPED = "Skipped"


class OracleObservation(BaseModel):
    """One classified sample of a cross-validation run.

    Attributes
    ----------
    source : str
        What was sampled, e.g. ``"witness of branch 0"`` or ``"solution for seed 1"``.
    direction : Direction
        Side of the real line the sample lives on (minus samples are written in t = -x).
    growth : GrowthClass | None
        None when the sample could not be classified.
    note : str | None
        Failure reason for unclassified samples.
    """

    model_config = ConfigDict(frozen=True)

    source: str
    direction: Direction
    growth: GrowthClass | None = None
    note: str | None = None


class OracleReport(BaseModel):
    """Outcome of `regsym.oracle.cross_validate.cross_validate`.

    Attributes
    ----------
    status : OracleStatus
        Consistent or Inconsistent when an assertion was made, Advisory when only observations are reported and
        Skipped when nothing could be checked.
    observations : tuple[OracleObservation, ...]
        Every classified sample.
    max_log_difference : float | None
        Largest |log|u|| difference between the closed-form witness and the integrated solution, when both exist.
    notes : tuple[str, ...]
        Human readable remarks.
    """

    model_config = ConfigDict(frozen=True)

    status: OracleStatus
    observations: tuple[OracleObservation, ...] = ()
    max_log_difference: Real17 | None = None
    notes: tuple[str, ...] = ()

    @property
    def consistent(self) -> bool:
        """Whether no assertion failed."""
        return self.status is not OracleStatus.INCONSISTENT
