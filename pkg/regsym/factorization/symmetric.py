"""Signed elementary symmetric functions.

With the sign convention sigma_h = (-1)^h e_h, the expansion of a product of linear factors reads

    prod_j (xi - xi_j) = sum_h sigma_h(xi_1, ..., xi_m) xi^(m - h).

Values may be anything closed under + and * with integers: Gaussian rationals, complex floats, or sympy polynomials
in x (the roots xi_j(x) of a factored operator).
"""

from collections.abc import Sequence
from typing import Any

from regsym.errors import IndexOutOfRange


def symmetric_coefficients(values: Sequence[Any], one: Any = 1) -> list[Any]:  # noqa: ANN401
    """
    Return [sigma_0, ..., sigma_m] of `values`, i.e. the descending coefficients of prod (xi - value).

    Parameters
    ----------
    values : Sequence
        The roots xi_1, ..., xi_m.
    one : Any
        Multiplicative unit of the value ring, used as sigma_0.
    """
    coefficients = [one]
    for value in values:
        coefficients.append(one * 0)
        # multiply by (xi - value) in place, highest index first
        for h in range(len(coefficients) - 1, 0, -1):
            coefficients[h] = coefficients[h] - value * coefficients[h - 1]
    return coefficients


def elementary_symmetric(h: int, values: Sequence[Any], one: Any = 1) -> Any:  # noqa: ANN401
    """
    Signed elementary symmetric function sigma_h of `values`.

    Parameters
    ----------
    h : int
        Index, 0 <= h <= len(values).
    values : Sequence
        The values xi_1, ..., xi_m.
    one : Any
        Value of sigma_0.

    Examples
    --------
    >>> elementary_symmetric(1, [1, 2, 3])
    -6
    >>> elementary_symmetric(2, [1, 2])
    2
    """
    if h < 0 or h > len(values):
        raise IndexOutOfRange(f"sigma_{h} is undefined for {len(values)} values")
    return symmetric_coefficients(values, one)[h]
