from regsym.algebra.bivariate import XI, BivariatePoly, X, gaussian, to_gaussian
from regsym.algebra.normalization import homogeneous_part, normalize_leading, reflect, shear
from regsym.algebra.operators import DiffOperator
from regsym.algebra.quantization import left_from_weyl, weyl_from_left

__all__ = [
    "XI",
    "BivariatePoly",
    "DiffOperator",
    "X",
    "gaussian",
    "homogeneous_part",
    "left_from_weyl",
    "normalize_leading",
    "reflect",
    "shear",
    "to_gaussian",
    "weyl_from_left",
]
