import numpy as np

from regsym.utils.sampling import (
    random_float_nodes,
    random_gaussian,
    random_nodes,
    random_operator,
    random_rational,
    random_symbol,
)


def test_random_rational_bounds(rng):
    for _ in range(50):
        value = random_rational(rng)
        assert abs(value.p) <= 5
        assert 1 <= value.q <= 4


def test_random_gaussian_nonzero(rng):
    assert all(random_gaussian(rng, nonzero=True) for _ in range(50))


def test_random_symbol(rng):
    for _ in range(20):
        symbol = random_symbol(rng, max_degree=5)
        assert not symbol.is_zero
        assert symbol.degree <= 5


def test_random_operator_has_nonzero_leading_slot(rng):
    for _ in range(20):
        operator = random_operator(rng)
        assert not operator.coeffs[0].is_zero
        assert operator.order <= 3


def test_random_nodes_are_distinct(rng):
    nodes = random_nodes(rng, 6)
    assert len(set(nodes)) == 6


def test_random_float_nodes_keep_their_gap(rng):
    nodes = random_float_nodes(rng, 5, radius=2.0, min_gap=0.5)
    assert all(abs(node) <= 2.0 for node in nodes)
    assert all(abs(a - b) >= 0.5 for i, a in enumerate(nodes) for b in nodes[i + 1 :])


def test_same_seed_same_symbols():
    first = [random_symbol(np.random.default_rng(9)) for _ in range(3)]
    second = [random_symbol(np.random.default_rng(9)) for _ in range(3)]
    assert first == second
