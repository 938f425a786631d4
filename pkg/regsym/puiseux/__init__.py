from regsym.puiseux.expansion import DEFAULT_DEPTH, expand_branches
from regsym.puiseux.newton_polygon import newton_polygon_slopes
from regsym.puiseux.series import evaluate_series, residual_certificate, residual_slope

__all__ = [
    "DEFAULT_DEPTH",
    "evaluate_series",
    "expand_branches",
    "newton_polygon_slopes",
    "residual_certificate",
    "residual_slope",
]
