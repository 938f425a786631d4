"""Exact fast-path classifiers.

Each class below implies global regularity on its own (the constant-coefficient class decides both ways), and each
test reduces to exact real-root counting, so no tolerance is involved. Classes are tried in a fixed order and the
first match wins.
"""

import logging

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ_I

from regsym.algebra.bivariate import BivariatePoly
from regsym.algebra.normalization import homogeneous_part
from regsym.models.verdict import Classification, SymbolClass
from regsym.regularity.real_roots import has_real_root

logger = logging.getLogger(__name__)

R = Symbol("r")


def _univariate(coefficients: dict[int, object]) -> Poly:
    rep = {(power,): c for power, c in coefficients.items() if c}
    if not rep:
        return Poly(0, R, domain=QQ_I)
    return Poly.from_dict(rep, R, domain=QQ_I)


def exchange_variables(p: BivariatePoly) -> BivariatePoly:
    """Return p(xi, -x): the symbol of the Fourier-conjugated operator."""
    return BivariatePoly.from_terms(
        {(beta, alpha): (-c if alpha % 2 else c) for (alpha, beta), c in p.terms.items()}
    )


def constant_coefficient(p: BivariatePoly) -> Classification | None:
    """No x-dependence: regular iff p(xi) has no real zero."""
    if p.x_degree:
        return None
    regular = not has_real_root(_univariate({alpha: c for (alpha, _), c in p.terms.items()}))
    note = "p(xi) has no real zero" if regular else "p(xi) vanishes at a real xi"
    return Classification(symbol_class=SymbolClass.CONSTANT_COEFFICIENT, m=p.degree, regular=regular, notes=(note,))


def globally_elliptic(p: BivariatePoly) -> Classification | None:
    """The principal part p_m vanishes only at the origin."""
    m = p.degree
    if m == 0:
        return None
    principal = homogeneous_part(p, m)
    if not principal.coeff(m, 0):
        return None
    # p_m(1, lam) = sum c[alpha, m - alpha] lam^alpha
    if has_real_root(_univariate({alpha: c for (alpha, _), c in principal.terms.items()})):
        return None
    return Classification(
        symbol_class=SymbolClass.GLOBALLY_ELLIPTIC, m=m, regular=True, notes=("p_m(1, lam) has no real root",)
    )


def quasi_elliptic_exponent(p: BivariatePoly) -> Rational | None:
    """Largest q with every term satisfying alpha + q*beta <= m, if it exceeds 1."""
    m = p.degree
    if not p.coeff(m, 0):
        return None
    ratios = [Rational(m - alpha, beta) for alpha, beta in p.terms if beta]
    if not ratios:
        return None
    q = min(ratios)
    return q if q > 1 else None


def _quasi_elliptic_test(p: BivariatePoly) -> Rational | None:
    q = quasi_elliptic_exponent(p)
    if q is None:
        return None
    m = p.degree
    weighted = {(alpha, beta): c for (alpha, beta), c in p.terms.items() if alpha + q * beta == m}
    for sign in (1, -1):
        restricted: dict[int, object] = {}
        for (alpha, beta), c in weighted.items():
            value = -c if sign < 0 and beta % 2 else c
            restricted[alpha] = restricted.get(alpha, QQ_I.zero) + value
        if has_real_root(_univariate(restricted)):
            return None
    return q


def quasi_elliptic(p: BivariatePoly) -> Classification | None:
    """Shape sum over alpha + q*beta <= m with q > 1 and p_{m,q}(+-1, r) free of real zeros."""
    q = _quasi_elliptic_test(p)
    if q is None:
        return None
    return Classification(
        symbol_class=SymbolClass.QUASI_ELLIPTIC,
        q=q,
        m=p.degree,
        regular=True,
        notes=(f"p_(m,q)(+-1, r) has no real root for q = {q}",),
    )


def sg_elliptic(p: BivariatePoly) -> Classification | None:
    """Bi-degree (m, n) with c[m, n] != 0 and both edge polynomials free of real zeros."""
    m, n = p.xi_degree, p.x_degree
    if not p.coeff(m, n):
        return None
    top_x = _univariate({alpha: c for (alpha, beta), c in p.terms.items() if beta == n})
    top_xi = _univariate({beta: c for (alpha, beta), c in p.terms.items() if alpha == m})
    if has_real_root(top_x) or has_real_root(top_xi):
        return None
    return Classification(
        symbol_class=SymbolClass.SG_ELLIPTIC,
        m=m,
        n=n,
        regular=True,
        notes=("sum_alpha c[alpha, n] xi^alpha and sum_beta c[m, beta] x^beta have no real root",),
    )


def quasi_elliptic_exchanged(p: BivariatePoly) -> Classification | None:
    """The quasi-elliptic test with the roles of x and xi exchanged (e.g. D + i x^m, D^2 + x^(2m))."""
    exchanged = exchange_variables(p)
    q = _quasi_elliptic_test(exchanged)
    if q is None:
        return None
    return Classification(
        symbol_class=SymbolClass.QUASI_ELLIPTIC_EXCHANGED,
        q=q,
        m=exchanged.degree,
        regular=True,
        notes=(f"p(xi, -x) is quasi-elliptic with q = {q}",),
    )


CLASSIFIERS = (constant_coefficient, globally_elliptic, quasi_elliptic, sg_elliptic, quasi_elliptic_exchanged)


def classify(p: BivariatePoly) -> Classification:
    """
    Return the first matching exact class of `p`.

    Parameters
    ----------
    p : BivariatePoly
        Weyl symbol as given (classification runs before shear normalization).

    Returns
    -------
    Classification
        `GENERAL` (with regular None) when no fast path applies.
    """
    if p.is_zero:
        return Classification(symbol_class=SymbolClass.GENERAL, notes=("zero symbol",))
    for classifier in CLASSIFIERS:
        result = classifier(p)
        if result is not None:
            logger.debug("%s classified as %s", p, result.symbol_class.value)
            return result
    return Classification(symbol_class=SymbolClass.GENERAL, m=p.degree, notes=("no exact fast path applies",))
