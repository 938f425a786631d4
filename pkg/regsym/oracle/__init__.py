from regsym.oracle.cross_validate import cross_validate, operator_in_direction, point_reflection
from regsym.oracle.growth import growth_exponent
from regsym.oracle.integrate import solve_operator_equation
from regsym.oracle.witness import counterexample_solution, default_grid

__all__ = [
    "counterexample_solution",
    "cross_validate",
    "default_grid",
    "growth_exponent",
    "operator_in_direction",
    "point_reflection",
    "solve_operator_equation",
]
