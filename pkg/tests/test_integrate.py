import numpy as np
import pytest
from sympy import I

from regsym.algebra.bivariate import X
from regsym.algebra.operators import DiffOperator
from regsym.errors import LeadingCoeffVanishes
from regsym.oracle.growth import growth_exponent
from regsym.oracle.integrate import admissible_span, default_seeds, leading_real_zeros, solve_operator_equation

pytestmark = pytest.mark.oracle


def test_default_seeds():
    assert default_seeds(1) == [[1]]
    assert default_seeds(3) == [[1, 0, 0], [1, 1, 0], [1, 0, 1]]


def test_exponential_decay_is_reproduced():
    # (D - i) u = 0 means u' = -u
    (sample,) = solve_operator_equation(DiffOperator([1, -I]), span=(1.0, 20.0), points=32)
    xs = np.asarray(sample.xs)
    assert np.allclose(sample.log_abs_u, -(xs - 1), atol=1e-6)


def test_oscillating_solution_stays_bounded():
    (sample,) = solve_operator_equation(DiffOperator([1, -X + 1]))
    assert np.allclose(sample.log_abs_u, 0.0, atol=1e-5)
    assert growth_exponent(sample).tempered


def test_gaussian_growth_is_followed_in_the_log_domain():
    # (D + i x) u = 0 means u' = x u, so log|u| = (x^2 - 1) / 2
    (sample,) = solve_operator_equation(DiffOperator([1, I * X]))
    xs = np.asarray(sample.xs)
    assert np.allclose(sample.log_abs_u, (xs**2 - 1) / 2, rtol=1e-6)


def test_second_order_gives_one_sample_per_seed():
    samples = solve_operator_equation(DiffOperator([1, 0, 1]), span=(1.0, 10.0), points=16)
    assert len(samples) == 2
    assert all(sample.usable for sample in samples)


def test_leading_zeros_move_the_start():
    operator = DiffOperator([X - 2, 1])
    assert leading_real_zeros(operator) == [2.0]
    start, stop = admissible_span(operator, (1.0, 100.0))
    assert start == pytest.approx(2.003)
    assert stop == 100.0


def test_complex_leading_coefficient_has_no_real_zero():
    assert leading_real_zeros(DiffOperator([X - I, 1])) == []


def test_leading_zero_past_the_span():
    with pytest.raises(LeadingCoeffVanishes):
        solve_operator_equation(DiffOperator([X - 200, 1]))


@pytest.mark.parametrize("span", [(0.5, 10.0), (10.0, 5.0), (1.0, 1e5)])
def test_span_must_be_inside_limits(span):
    with pytest.raises(ValueError, match="span"):
        solve_operator_equation(DiffOperator([1, 1]), span=span)


def test_seed_shape_is_checked():
    with pytest.raises(ValueError, match="2 initial values"):
        solve_operator_equation(DiffOperator([1, 0, 1]), seeds=[[1]])


def test_zero_seed_is_rejected():
    with pytest.raises(ValueError, match="zero seed"):
        solve_operator_equation(DiffOperator([1, 1]), seeds=[[0]])
