from regsym.utils.formatting import branch_table, format_complex, render_report
from regsym.utils.sampling import (
    random_float_nodes,
    random_gaussian,
    random_nodes,
    random_operator,
    random_symbol,
    random_x_poly,
)

__all__ = [
    "branch_table",
    "format_complex",
    "random_float_nodes",
    "random_gaussian",
    "random_nodes",
    "random_operator",
    "random_symbol",
    "random_x_poly",
    "render_report",
]
