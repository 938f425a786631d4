"""Exact bivariate polynomials in (x, xi) over the Gaussian rationals.

This module provides:
- XI, X: the sympy generators every symbol is written in (xi first, so monomials read (alpha, beta)).
- gaussian / to_gaussian: constructors for exact Gaussian-rational coefficients (sympy's QQ_I elements).
- BivariatePoly: immutable wrapper around a `sympy.Poly` over QQ_I with the term map used throughout regsym.
"""

import logging
from collections.abc import Iterator, Mapping
from fractions import Fraction
from functools import cached_property

from sympy import I, Poly, Rational, symbols, sympify
from sympy.core.expr import Expr
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

logger = logging.getLogger(__name__)

XI, X = symbols("xi x")

GaussianLike = GaussianRational | int | Fraction | Rational | Expr | str


def gaussian(re: int | Fraction | Rational | str = 0, im: int | Fraction | Rational | str = 0) -> GaussianRational:
    """Build the exact Gaussian rational ``re + i*im``."""
    return QQ_I.from_sympy(Rational(re) + I * Rational(im))


def to_gaussian(value: GaussianLike) -> GaussianRational:
    """Coerce an exact scalar into QQ_I.

    Floats are rejected: only exactly representable inputs are accepted.
    """
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, float | complex):
        raise TypeError(f"inexact coefficient {value!r}; use integers, rationals or strings like '1/3'")
    return QQ_I.from_sympy(sympify(value).expand())


def gaussian_parts(value: GaussianRational) -> tuple[Rational, Rational]:
    """Return the exact real and imaginary parts as sympy rationals."""
    return QQ.to_sympy(value.x), QQ.to_sympy(value.y)


def gaussian_to_complex(value: GaussianRational) -> complex:
    """Round an exact coefficient to a complex float."""
    re, im = gaussian_parts(value)
    return complex(float(re), float(im))


def gaussian_conjugate(value: GaussianRational) -> GaussianRational:
    """Complex conjugate of an exact coefficient."""
    return QQ_I.new(value.x, -value.y)


def format_gaussian(value: GaussianRational) -> str:
    """Render a coefficient in the symbol grammar (``3``, ``-1/2``, ``2*i``, ``(1+2*i)``)."""
    re, im = gaussian_parts(value)
    if im == 0:
        return str(re)
    imaginary = "i" if abs(im) == 1 else f"{abs(im)}*i"
    if re == 0:
        return imaginary if im > 0 else f"-{imaginary}"
    sign = "+" if im > 0 else "-"
    return f"({re}{sign}{imaginary})"


def _monomial(alpha: int, beta: int) -> str:
    parts = []
    if alpha:
        parts.append("xi" if alpha == 1 else f"xi^{alpha}")
    if beta:
        parts.append("x" if beta == 1 else f"x^{beta}")
    return "*".join(parts)


class BivariatePoly:
    """An exact polynomial ``sum c[alpha, beta] * xi^alpha * x^beta`` with Gaussian-rational coefficients.

    Instances are immutable; every operation returns a new polynomial. The zero polynomial has no terms.

    Attributes
    ----------
    terms : dict[tuple[int, int], GaussianRational]
        Nonzero coefficients keyed by (xi-degree alpha, x-degree beta).
    degree : int
        Total degree m = max(alpha + beta); 0 for constants and for the zero polynomial.

    Methods
    -------
    from_terms(terms) -> BivariatePoly
        Build a polynomial from a coefficient map.
    from_expr(expr) -> BivariatePoly
        Build a polynomial from a sympy expression in XI and X.
    coeff(alpha, beta) -> GaussianRational
        Coefficient of xi^alpha x^beta (zero when absent).
    diff_x() / diff_xi() -> BivariatePoly
        Partial derivatives.
    evaluate(x, xi) -> complex
        Numeric evaluation with float arithmetic.
    """

    def __init__(self, poly: Poly) -> None:
        if poly.gens != (XI, X) or poly.domain != QQ_I:
            poly = Poly(poly.as_expr(), XI, X, domain=QQ_I)
        self._poly = poly

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], GaussianLike]) -> "BivariatePoly":
        """Build a polynomial from a map (alpha, beta) -> coefficient, dropping zero coefficients."""
        rep = {}
        for (alpha, beta), value in terms.items():
            if alpha < 0 or beta < 0:
                raise ValueError(f"negative exponent in monomial {(alpha, beta)}")
            coeff = to_gaussian(value)
            if coeff:
                rep[(int(alpha), int(beta))] = coeff
        if not rep:
            return cls.zero()
        return cls(Poly.from_dict(rep, XI, X, domain=QQ_I))

    @classmethod
    def from_expr(cls, expr: Expr | str | int) -> "BivariatePoly":
        """Build a polynomial from a sympy expression written in `XI` and `X`."""
        return cls(Poly(sympify(expr), XI, X, domain=QQ_I))

    @classmethod
    def zero(cls) -> "BivariatePoly":
        """Return the zero polynomial."""
        return cls(Poly(0, XI, X, domain=QQ_I))

    @classmethod
    def constant(cls, value: GaussianLike) -> "BivariatePoly":
        """Return a constant polynomial."""
        return cls.from_terms({(0, 0): value})

    @classmethod
    def xi(cls) -> "BivariatePoly":
        """Return the polynomial xi."""
        return cls.from_terms({(1, 0): 1})

    @classmethod
    def x(cls) -> "BivariatePoly":
        """Return the polynomial x."""
        return cls.from_terms({(0, 1): 1})

    # ----------------------------------- Read-off -----------------------------------

    @cached_property
    def terms(self) -> dict[tuple[int, int], GaussianRational]:
        """Nonzero coefficients keyed by (alpha, beta)."""
        return dict(self._poly.as_dict(native=True))

    @cached_property
    def degree(self) -> int:
        """Total degree."""
        return max((alpha + beta for alpha, beta in self.terms), default=0)

    @cached_property
    def xi_degree(self) -> int:
        """Degree in xi."""
        return max((alpha for alpha, _ in self.terms), default=0)

    @cached_property
    def x_degree(self) -> int:
        """Degree in x."""
        return max((beta for _, beta in self.terms), default=0)

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.terms

    @cached_property
    def numeric_terms(self) -> tuple[tuple[int, int, complex], ...]:
        """Terms with coefficients rounded to complex floats."""
        return tuple((alpha, beta, gaussian_to_complex(c)) for (alpha, beta), c in sorted(self.terms.items()))

    def coeff(self, alpha: int, beta: int) -> GaussianRational:
        """Coefficient of xi^alpha x^beta."""
        return self.terms.get((alpha, beta), QQ_I.zero)

    def as_poly(self) -> Poly:
        """The underlying sympy polynomial in (XI, X) over QQ_I."""
        return self._poly

    def as_expr(self) -> Expr:
        """The polynomial as a sympy expression."""
        return self._poly.as_expr()

    def x_coefficient(self, alpha: int) -> Poly:
        """Coefficient of xi^alpha as a univariate polynomial in X."""
        rep = {(beta,): c for (a, beta), c in self.terms.items() if a == alpha}
        if not rep:
            return Poly(0, X, domain=QQ_I)
        return Poly.from_dict(rep, X, domain=QQ_I)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], GaussianRational]]:
        return iter(sorted(self.terms.items()))

    # ----------------------------------- Arithmetic -----------------------------------

    def __add__(self, other: "BivariatePoly | GaussianLike") -> "BivariatePoly":
        return BivariatePoly(self._poly + _coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other: "BivariatePoly | GaussianLike") -> "BivariatePoly":
        return BivariatePoly(self._poly - _coerce(other)._poly)

    def __rsub__(self, other: "BivariatePoly | GaussianLike") -> "BivariatePoly":
        return BivariatePoly(_coerce(other)._poly - self._poly)

    def __mul__(self, other: "BivariatePoly | GaussianLike") -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            return BivariatePoly(self._poly * other._poly)
        return self.scale(other)

    __rmul__ = __mul__

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly(-self._poly)

    def __pow__(self, exponent: int) -> "BivariatePoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return BivariatePoly(self._poly**exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def scale(self, value: GaussianLike) -> "BivariatePoly":
        """Multiply by an exact scalar."""
        return BivariatePoly(self._poly.mul_ground(to_gaussian(value)))

    def diff_x(self) -> "BivariatePoly":
        """Partial derivative in x."""
        return BivariatePoly(self._poly.diff(X))

    def diff_xi(self) -> "BivariatePoly":
        """Partial derivative in xi."""
        return BivariatePoly(self._poly.diff(XI))

    def conjugate(self) -> "BivariatePoly":
        """Conjugate every coefficient (x and xi treated as real)."""
        return BivariatePoly.from_terms({k: gaussian_conjugate(c) for k, c in self.terms.items()})

    def evaluate(self, x: complex, xi: complex) -> complex:
        """Evaluate with complex float arithmetic."""
        return sum((c * xi**alpha * x**beta for alpha, beta, c in self.numeric_terms), start=0j)

    # ----------------------------------- Display -----------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        ordered = sorted(self.terms.items(), key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]))
        pieces = []
        for (alpha, beta), c in ordered:
            monomial = _monomial(alpha, beta)
            text = format_gaussian(c)
            negative = text.startswith("-")
            magnitude = text[1:] if negative else text
            if monomial and magnitude == "1":
                body = monomial
            elif monomial:
                body = f"{magnitude}*{monomial}"
            else:
                body = magnitude
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BivariatePoly({self})"


def _coerce(value: "BivariatePoly | GaussianLike") -> BivariatePoly:
    if isinstance(value, BivariatePoly):
        return value
    return BivariatePoly.constant(value)
