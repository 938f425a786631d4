"""Noncommutative composition of differential operators with polynomial coefficients.

This module provides:
- compose_operators: the exact product of two operators, moving every D to the right with Leibniz' rule
  D^p o b = sum_k C(p, k) (D^k b) D^(p - k).
- expand_factored: the operator sum a_k D^(r1 - k) o prod (D - xi_j(x)) together with the checks of its slot
  structure (leading slots given by signed symmetric functions, remainders vanishing for constant roots).
- weyl_product_standard: the standard symbol of an operator whose Weyl symbol is a product of two polynomials in xi,
  checked against the explicit derivative expansion of the remainders.
"""

import logging
from collections.abc import Sequence
from math import comb

from sympy import Poly
from sympy.polys.domains import QQ_I

from regsym.algebra.bivariate import BivariatePoly, X, gaussian
from regsym.algebra.operators import DiffOperator, XPolyLike, apply_d, x_poly
from regsym.algebra.quantization import left_from_weyl
from regsym.errors import FactorizationIdentityError
from regsym.factorization.symmetric import symmetric_coefficients

logger = logging.getLogger(__name__)


def _zero() -> Poly:
    return Poly(0, X, domain=QQ_I)


def compose_operators(lhs: DiffOperator, rhs: DiffOperator) -> DiffOperator:
    """
    Return lhs o rhs.

    Parameters
    ----------
    lhs, rhs : DiffOperator
        Operators sum c_k(x) D^(m - k).

    Examples
    --------
    D o x = x D - i, so (D - x) o (D - x) = D^2 - 2x D + (x^2 + i).
    """
    powers: dict[int, Poly] = {}
    for p, a in lhs.powers().items():
        for q, b in rhs.powers().items():
            for k in range(p + 1):
                derivative = apply_d(b, k)
                if derivative.is_zero:
                    break
                term = (a * derivative).mul_ground(QQ_I.convert(comb(p, k)))
                power = p - k + q
                powers[power] = powers.get(power, _zero()) + term
    return DiffOperator.from_powers({power: c for power, c in powers.items() if not c.is_zero})


def factor_product(xi_polys: Sequence[XPolyLike]) -> DiffOperator:
    """Return (D - xi_1(x)) o ... o (D - xi_r(x)), composed left to right."""
    result = DiffOperator([1])
    for xi in xi_polys:
        result = compose_operators(result, DiffOperator([1, -x_poly(xi)]))
    return result


def factorization_remainders(a: Sequence[XPolyLike], xi_polys: Sequence[XPolyLike]) -> tuple[DiffOperator, list[Poly]]:
    """
    Expand sum a_k D^(r1 - k) o prod (D - xi_j) and return it with the remainders R_k.

    R_k is the coefficient of D^(r1 + r2 - k) minus sum_{l + h = k} a_l sigma_h(xi_1, ..., xi_r2).
    """
    a_polys = [x_poly(c) for c in a]
    if not a_polys or a_polys[0].is_zero:
        raise ValueError("the leading coefficient a_0 must be nonzero")
    r1, r2 = len(a_polys) - 1, len(xi_polys)
    operator = compose_operators(DiffOperator(a_polys), factor_product(xi_polys))
    sigmas = symmetric_coefficients([x_poly(xi) for xi in xi_polys], one=Poly(1, X, domain=QQ_I))
    remainders = []
    for k in range(r1 + r2 + 1):
        expected = _zero()
        for j, a_j in enumerate(a_polys):
            h = k - j
            if 0 <= h <= r2:
                expected = expected + a_j * sigmas[h]
        remainders.append(operator.power_coefficient(r1 + r2 - k) - expected)
    return operator, remainders


def expand_factored(a: Sequence[XPolyLike], xi_polys: Sequence[XPolyLike]) -> DiffOperator:
    """
    Expand sum a_k(x) D^(r1 - k) o prod_j (D - xi_j(x)) and verify its slot structure.

    Parameters
    ----------
    a : Sequence
        Coefficients a_0, ..., a_r1 (polynomials in x, a_0 nonzero).
    xi_polys : Sequence
        Roots xi_(r1+1), ..., xi_(r1+r2) as polynomials in x.

    Raises
    ------
    FactorizationIdentityError
        If R_0 or R_1 is nonzero, or if some R_k is nonzero although every xi_j is constant.
    """
    operator, remainders = factorization_remainders(a, xi_polys)
    for k, remainder in enumerate(remainders[:2]):
        if not remainder.is_zero:
            raise FactorizationIdentityError(f"R_{k} = {remainder.as_expr()} should vanish")
    if all(x_poly(xi).degree() <= 0 for xi in xi_polys):
        nonzero = [k for k, remainder in enumerate(remainders) if not remainder.is_zero]
        if nonzero:
            raise FactorizationIdentityError(f"constant roots leave nonzero remainders R_{nonzero}")
    logger.debug("expanded factored operator of order %d", operator.order)
    return operator


def _symbol_from_slots(slots: Sequence[XPolyLike]) -> BivariatePoly:
    """sum_j c_j(x) xi^(r - j) for slots c_0, ..., c_r."""
    r = len(slots) - 1
    terms = {}
    for j, slot in enumerate(slots):
        for (beta,), value in x_poly(slot).as_dict(native=True).items():
            terms[(r - j, beta)] = value
    return BivariatePoly.from_terms(terms)


def weyl_product_remainders(a_polys: Sequence[XPolyLike], b_polys: Sequence[XPolyLike]) -> list[Poly]:
    """
    Remainders R_k of the standard symbol of a Weyl product, from the derivative expansion.

    d_x^nu d_xi^nu of (a_l b_h) xi^(r - l - h) contributes (-i/2)^nu C(r - l - h, nu) (a_l b_h)^(nu) to the slot
    k = l + h + nu, so every remainder is a combination of derivatives of the products a_l b_h of order >= 1.
    """
    a_list, b_list = [x_poly(c) for c in a_polys], [x_poly(c) for c in b_polys]
    r = len(a_list) + len(b_list) - 2
    products: dict[int, Poly] = {}
    for j, a_j in enumerate(a_list):
        for h, b_h in enumerate(b_list):
            products[j + h] = products.get(j + h, _zero()) + a_j * b_h
    remainders = []
    for k in range(r + 1):
        total = _zero()
        for nu in range(1, k + 1):
            product = products.get(k - nu)
            if product is None:
                continue
            power = r - (k - nu)
            weight = gaussian(0, -1) ** nu * QQ_I.convert(comb(power, nu)) / QQ_I.convert(2**nu)
            total = total + product.diff((X, nu)).mul_ground(weight)
        remainders.append(total)
    return remainders


def weyl_product_standard(a_polys: Sequence[XPolyLike], b_polys: Sequence[XPolyLike]) -> BivariatePoly:
    """
    Standard symbol of the operator with Weyl symbol (sum a_j xi^(r1 - j)) * (sum b_h xi^(r2 - h)).

    Parameters
    ----------
    a_polys : Sequence
        Slots a_0, ..., a_r1.
    b_polys : Sequence
        Slots b_0, ..., b_r2.

    Raises
    ------
    FactorizationIdentityError
        If the slot k of the result differs from sum a_l b_h + R_k with the explicit remainders.
    """
    weyl = _symbol_from_slots(a_polys) * _symbol_from_slots(b_polys)
    standard = left_from_weyl(weyl)
    remainders = weyl_product_remainders(a_polys, b_polys)
    r = len(remainders) - 1
    for k, remainder in enumerate(remainders):
        expected = weyl.x_coefficient(r - k) + remainder
        if standard.x_coefficient(r - k) != expected:
            raise FactorizationIdentityError(f"slot {k} of the standard symbol breaks the product formula")
    return standard
