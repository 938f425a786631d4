"""Ordinary differential operators with polynomial coefficients, written in powers of D = -i d/dx."""

import logging
from collections.abc import Sequence

from sympy import Poly, sympify
from sympy.polys.domains import QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from regsym.algebra.bivariate import BivariatePoly, GaussianLike, X, gaussian

logger = logging.getLogger(__name__)

MINUS_I = gaussian(0, -1)

XPolyLike = Poly | GaussianLike


def x_poly(value: XPolyLike) -> Poly:
    """Coerce a scalar, sympy expression or Poly into a univariate Poly in X over QQ_I."""
    if isinstance(value, Poly):
        if value.gens == (X,) and value.domain == QQ_I:
            return value
        return Poly(value.as_expr(), X, domain=QQ_I)
    if isinstance(value, BivariatePoly):
        if value.xi_degree:
            raise ValueError(f"{value} depends on xi")
        return value.x_coefficient(0)
    if isinstance(value, GaussianRational):
        return Poly.from_dict({(0,): value}, X, domain=QQ_I) if value else Poly(0, X, domain=QQ_I)
    return Poly(sympify(value).expand(), X, domain=QQ_I)


def apply_d(u: Poly, times: int = 1) -> Poly:
    """Apply D = -i d/dx to a polynomial `times` times."""
    for _ in range(times):
        if u.is_zero:
            break
        u = u.diff(X).mul_ground(MINUS_I)
    return u


class DiffOperator:
    """
    The operator sum_k c_k(x) D^(m-k), stored as the slots c_0, ..., c_m.

    Leading zero slots are stripped, so `order` is the true order and `coeffs[0]` is nonzero unless the operator is
    zero (no slots).

    Methods
    -------
    from_left_symbol(a) -> DiffOperator
        Read a left symbol sum c_k(x) xi^(m-k) as an operator.
    left_symbol() -> BivariatePoly
        The left symbol of the operator.
    apply(u) -> Poly
        Apply the operator to a polynomial test function.
    """

    def __init__(self, coeffs: Sequence[XPolyLike]) -> None:
        polys = [x_poly(c) for c in coeffs]
        while polys and polys[0].is_zero:
            polys.pop(0)
        self.coeffs: tuple[Poly, ...] = tuple(polys)

    @classmethod
    def from_powers(cls, powers: dict[int, Poly]) -> "DiffOperator":
        """Build from a map D-power -> coefficient."""
        if not powers:
            return cls([])
        order = max(powers)
        zero = Poly(0, X, domain=QQ_I)
        return cls([powers.get(order - k, zero) for k in range(order + 1)])

    @classmethod
    def from_left_symbol(cls, a: BivariatePoly) -> "DiffOperator":
        """Read the left symbol `a` as an operator with every x-factor to the left of the D-powers."""
        return cls.from_powers({alpha: a.x_coefficient(alpha) for alpha in range(a.xi_degree + 1)})

    @property
    def order(self) -> int:
        """Order m; -1 for the zero operator."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        """Whether the operator has no nonzero slot."""
        return not self.coeffs

    def power_coefficient(self, power: int) -> Poly:
        """Coefficient of D^power."""
        k = self.order - power
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Poly(0, X, domain=QQ_I)

    def powers(self) -> dict[int, Poly]:
        """Nonzero slots keyed by the power of D."""
        return {self.order - k: c for k, c in enumerate(self.coeffs) if not c.is_zero}

    def left_symbol(self) -> BivariatePoly:
        """Return sum c_k(x) xi^(m-k)."""
        terms = {}
        for power, c in self.powers().items():
            for (beta,), value in c.as_dict(native=True).items():
                terms[(power, beta)] = value
        return BivariatePoly.from_terms(terms)

    def apply(self, u: XPolyLike) -> Poly:
        """Apply the operator to a polynomial in x."""
        u = x_poly(u)
        result = Poly(0, X, domain=QQ_I)
        for power, c in self.powers().items():
            result = result + c * apply_d(u, power)
        return result

    def __matmul__(self, other: "DiffOperator") -> "DiffOperator":
        from regsym.factorization.composition import compose_operators

        return compose_operators(self, other)

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        powers = dict(self.powers())
        for power, c in other.powers().items():
            powers[power] = powers[power] + c if power in powers else c
        return DiffOperator.from_powers(powers)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.powers() == other.powers()

    def __hash__(self) -> int:
        return hash(tuple(sorted((k, str(c.as_expr())) for k, c in self.powers().items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "DiffOperator(0)"
        body = " + ".join(f"({c.as_expr()})*D^{power}" for power, c in sorted(self.powers().items(), reverse=True))
        return f"DiffOperator({body})"
