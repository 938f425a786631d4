from regsym.factorization.composition import (
    compose_operators,
    expand_factored,
    factor_product,
    weyl_product_standard,
)
from regsym.factorization.interpolation import InterpMatrix, build_matrix_A, inverse_B
from regsym.factorization.symmetric import elementary_symmetric, symmetric_coefficients

__all__ = [
    "InterpMatrix",
    "build_matrix_A",
    "compose_operators",
    "elementary_symmetric",
    "expand_factored",
    "factor_product",
    "inverse_B",
    "symmetric_coefficients",
    "weyl_product_standard",
]
