"""Tolerances and engine options.

This module provides:
- Direction, Quantization: the two enumerated switches of the pipeline.
- Tolerances: every numeric threshold the engine uses, echoed in each report.
- EngineOptions: the full option set passed to `regsym.regularity.decide.decide`.
"""

import os
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Rational

from regsym.models.types import RationalValue

PRECISION_ENV = "REGSYM_PRECISION"


class Direction(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> int:
        """+1 for x -> +inf, -1 for x -> -inf."""
        return 1 if self is Direction.PLUS else -1


class Quantization(str, Enum):
    WEYL = "weyl"
    LEFT = "left"


class Tolerances(BaseModel):
    """Numeric thresholds.

    Attributes
    ----------
    precision : float
        Relative residual |q(c)| <= precision * ||q|| required to certify an edge polynomial root.
    im_tol : float
        Imaginary parts at or below this are treated as zero by the growth condition.
    lambda_tol : float
        |Im lambda| at or below this makes a leading slope real.
    cluster_tol : float
        Roots closer than cluster_tol * (1 + |c|) are merged into one multiple root.
    zero_tol : float
        Coefficients below zero_tol times their local scale are dropped.
    residual_slack : float
        Slack added to the analytic residual slope bound.
    slope_cap : float
        Largest |log-log slope| still read as polynomially bounded growth.
    """

    model_config = ConfigDict(frozen=True)

    precision: float = Field(1e-12, gt=0, lt=1)
    im_tol: float = Field(1e-8, gt=0)
    lambda_tol: float = Field(1e-8, gt=0)
    cluster_tol: float = Field(1e-8, gt=0)
    zero_tol: float = Field(1e-10, gt=0)
    residual_slack: float = Field(0.2, ge=0)
    slope_cap: float = Field(50.0, gt=0)

    @classmethod
    def from_env(cls, **overrides: float) -> "Tolerances":
        """Build tolerances, taking the precision from REGSYM_PRECISION unless overridden."""
        value = os.environ.get(PRECISION_ENV)
        if value is not None and "precision" not in overrides:
            overrides["precision"] = value
        return cls(**overrides)

    def as_strings(self) -> dict[str, str]:
        """Every threshold as a 17-digit string, the JSON form used in reports."""
        return {name: format(value, ".17g") for name, value in self.model_dump().items()}


def default_residual_xs() -> tuple[float, ...]:
    """Twelve geometrically spaced sample points in [1e2, 1e4]."""
    return tuple(np.geomspace(1e2, 1e4, 12).tolist())


def check_depth(depth: Rational) -> Rational:
    """Expansions must reach past the exponent -1."""
    if depth > -1:
        raise ValueError(f"depth must be <= -1, got {depth}")
    return depth


def check_residual_xs(xs: tuple[float, ...]) -> tuple[float, ...]:
    """Residual grids need at least 8 increasing points inside [1e2, 1e6]."""
    if len(xs) < 8:
        raise ValueError("residual grid needs at least 8 points")
    if any(b <= a for a, b in zip(xs, xs[1:], strict=False)):
        raise ValueError("residual grid must be strictly increasing")
    if xs[0] < 1e2 or xs[-1] > 1e6:
        raise ValueError("residual grid must lie in [1e2, 1e6]")
    return xs


def check_directions(directions: tuple[Direction, ...]) -> tuple[Direction, ...]:
    """Deduplicate while keeping plus before minus."""
    if not directions:
        raise ValueError("at least one direction is required")
    return tuple(d for d in (Direction.PLUS, Direction.MINUS) if d in directions)


class EngineOptions(BaseModel):
    """Options for one run of the decision pipeline.

    Attributes
    ----------
    quantization : Quantization
        Whether the input is a Weyl symbol or a left (standard) symbol.
    directions : tuple[Direction, ...]
        Directions to expand in; the theorem path needs both.
    depth : Rational
        Expansions are correct for every exponent above this value.
    tolerances : Tolerances
        Numeric thresholds.
    workers : int
        1 runs sequentially; more expands the directions on a thread pool.
    residual_xs : tuple[float, ...]
        Sample grid for residual certificates.
    oracle : bool
        Run the ODE oracle after deciding.
    """

    model_config = ConfigDict(frozen=True)

    quantization: Quantization = Quantization.WEYL
    directions: tuple[Direction, ...] = (Direction.PLUS, Direction.MINUS)
    depth: RationalValue = Rational(-9, 4)
    tolerances: Tolerances = Field(default_factory=Tolerances.from_env)
    workers: int = Field(1, ge=1)
    residual_xs: tuple[float, ...] = Field(default_factory=default_residual_xs)
    oracle: bool = False

    _check_depth = field_validator("depth", mode="after")(check_depth)
    _check_residual_xs = field_validator("residual_xs", mode="after")(check_residual_xs)
    _check_directions = field_validator("directions", mode="after")(check_directions)
