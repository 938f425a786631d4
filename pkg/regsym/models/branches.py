from math import lcm
from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator
from sympy import Rational

from regsym.models.options import Direction
from regsym.models.types import ComplexValue, RationalValue, Real17, SymbolValue


class SeriesTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    exponent: RationalValue
    coefficient: ComplexValue


def check_descending(terms: tuple[SeriesTerm, ...]) -> tuple[SeriesTerm, ...]:
    """Exponents must be strictly descending and at most 1."""
    exponents = [term.exponent for term in terms]
    if any(e > 1 for e in exponents):
        raise ValueError("exponents above 1 cannot occur after normalization")
    if any(b >= a for a, b in zip(exponents, exponents[1:], strict=False)):
        raise ValueError("exponents must be strictly descending")
    return terms


class PuiseuxSeries(BaseModel):
    """Truncated expansion of one root xi_j(x) as x -> +inf (or of xi_j(-t) as t -> +inf).

    Attributes
    ----------
    direction : Direction
        Direction the branch belongs to. Minus-direction branches are written in the positive variable t = -x.
    ramification : int
        Least common multiple of the exponent denominators.
    terms : tuple[SeriesTerm, ...]
        (exponent, coefficient) pairs in strictly descending exponent order.
    truncation_exponent : Rational | None
        Every term with a larger exponent is present; None when the branch terminates (the sum is an exact root).
    exact : bool
        Whether the engine computed every coefficient in exact arithmetic.
    """

    model_config = ConfigDict(frozen=True)

    direction: Direction
    ramification: int = 1
    terms: tuple[SeriesTerm, ...] = ()
    truncation_exponent: RationalValue | None = None
    exact: bool = False

    _precise_terms: tuple[tuple[Rational, Any], ...] | None = PrivateAttr(default=None)

    _check_descending = field_validator("terms", mode="after")(check_descending)

    @classmethod
    def from_engine(
        cls,
        direction: Direction,
        precise_terms: list[tuple[Rational, Any]],
        truncation_exponent: Rational | None,
        to_complex: Any,  # noqa: ANN401
        exact: bool,
    ) -> "PuiseuxSeries":
        """Build a series from engine terms, keeping the full-precision coefficients for residual checks."""
        ramification = lcm(*(int(e.q) for e, _ in precise_terms)) if precise_terms else 1
        series = cls(
            direction=direction,
            ramification=ramification,
            terms=tuple(SeriesTerm(exponent=e, coefficient=to_complex(c)) for e, c in precise_terms),
            truncation_exponent=truncation_exponent,
            exact=exact,
        )
        series._precise_terms = tuple(precise_terms)
        return series

    @property
    def precise_terms(self) -> tuple[tuple[Rational, Any], ...] | None:
        """Exact or extended-precision coefficients, when the series came from the engine."""
        return self._precise_terms

    @property
    def is_terminating(self) -> bool:
        """Whether the series is an exact root."""
        return self.truncation_exponent is None

    @property
    def slope(self) -> complex:
        """Leading slope lambda_j, the coefficient of x^1 (0 when absent)."""
        return self.coefficient_at(Rational(1))

    def coefficient_at(self, exponent: Rational) -> complex:
        """Coefficient of x^exponent (0 when absent)."""
        for term in self.terms:
            if term.exponent == exponent:
                return term.coefficient
        return 0j

    def deviation(self) -> tuple[SeriesTerm, ...]:
        """Terms with exponent below 1, i.e. xi_j(x) - lambda_j x."""
        return tuple(term for term in self.terms if term.exponent < 1)

    def leading_deviation(self) -> SeriesTerm | None:
        """First term after lambda_j x, or None when the deviation vanishes to the truncation."""
        deviation = self.deviation()
        return deviation[0] if deviation else None

    def __str__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"({t.coefficient:.6g})*x^({t.exponent})" for t in self.terms)
        tail = "" if self.truncation_exponent is None else f" + O(x^({self.truncation_exponent}))"
        return body + tail


class ResidualCertificate(BaseModel):
    """Empirical check that a truncated branch nearly annihilates the symbol.

    Attributes
    ----------
    branch : int
        Index of the branch in its `BranchSet`.
    slope : float
        Log-log slope of |p(x, branch(x))|; -inf when every sampled residual is exactly zero.
    bound : float | None
        Analytic bound (slack included) for truncated branches; None for terminating branches.
    max_relative : float
        Largest residual relative to the sum of the absolute values of its terms.
    passed : bool
        Whether the certificate holds.
    """

    model_config = ConfigDict(frozen=True)

    branch: int
    slope: Real17
    bound: Real17 | None
    max_relative: Real17
    passed: bool


class BranchSet(BaseModel):
    """All root expansions of one symbol in one direction.

    Attributes
    ----------
    symbol : BivariatePoly
        The (normalized) symbol that was expanded; for the minus direction this is still the unreflected symbol.
    direction : Direction
        Expansion direction.
    depth : Rational
        Every branch is correct for exponents above this value.
    branches : tuple[PuiseuxSeries, ...]
        One series per root, counted with multiplicity.
    residual_certificates : tuple[ResidualCertificate, ...]
        One certificate per branch (empty when certificates were not requested).
    unseparated : tuple[tuple[int, ...], ...]
        Groups of branch indices that still coincide at the depth.
    """

    model_config = ConfigDict(frozen=True)

    symbol: SymbolValue
    direction: Direction
    depth: RationalValue
    branches: tuple[PuiseuxSeries, ...]
    residual_certificates: tuple[ResidualCertificate, ...] = ()
    unseparated: tuple[tuple[int, ...], ...] = ()

    @property
    def ramification(self) -> int:
        """Common ramification index of all branches."""
        return lcm(*(branch.ramification for branch in self.branches)) if self.branches else 1

    @property
    def certified(self) -> bool:
        """Whether every residual certificate passed."""
        return all(certificate.passed for certificate in self.residual_certificates)

    def coincident(self, j: int, k: int) -> bool:
        """Whether branches j and k were reported unseparated at depth."""
        return any(j in group and k in group for group in self.unseparated)
