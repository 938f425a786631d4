"""Conversion between the left (standard) symbol and the Weyl symbol of a differential operator.

Both directions are finite sums of mixed derivatives,

    weyl = sum_g (1/g!) (i/2)^g  d_x^g d_xi^g a
    left = sum_g (1/g!) (-i/2)^g d_x^g d_xi^g p

since D_x = -i d_x. The sums stop once the mixed derivative vanishes, so every step is exact.
"""

import logging

from sympy import Rational

from regsym.algebra.bivariate import BivariatePoly, gaussian

logger = logging.getLogger(__name__)


def _mixed_exponential(symbol: BivariatePoly, half_i_sign: int) -> BivariatePoly:
    """Apply exp(half_i_sign * (i/2) d_x d_xi) to a polynomial symbol."""
    result = symbol
    derivative = symbol
    factor = gaussian(1)
    step = gaussian(0, Rational(half_i_sign, 2))
    order = 0
    while True:
        derivative = derivative.diff_x().diff_xi()
        if derivative.is_zero:
            break
        order += 1
        factor = factor * step * gaussian(Rational(1, order))
        result = result + derivative.scale(factor)
    logger.debug("mixed exponential stopped after %d correction terms", order)
    return result


def weyl_from_left(a: BivariatePoly) -> BivariatePoly:
    """
    Return the Weyl symbol of the operator whose left symbol is `a`.

    Parameters
    ----------
    a : BivariatePoly
        Left symbol: sum a[alpha, beta] x^beta xi^alpha read as sum a[alpha, beta] x^beta D^alpha.
    """
    return _mixed_exponential(a, 1)


def left_from_weyl(p: BivariatePoly) -> BivariatePoly:
    """
    Return the left symbol of the operator whose Weyl symbol is `p`.

    Parameters
    ----------
    p : BivariatePoly
        Weyl symbol.
    """
    return _mixed_exponential(p, -1)
