import numpy as np
import pytest

from regsym.errors import InsufficientRange
from regsym.models.growth import GrowthLabel, GrowthSample
from regsym.oracle.growth import growth_exponent

XS = np.geomspace(1.0, 100.0, 64)


def sample(values, xs=XS, **kwargs):
    return GrowthSample(xs=tuple(xs.tolist()), log_abs_u=tuple(np.asarray(values, dtype=float).tolist()), **kwargs)


@pytest.mark.parametrize(
    ("values", "label"),
    [
        (3 * np.log(XS), GrowthLabel.POLYNOMIAL_BOUNDED),
        (-2 * np.log(XS) + 1, GrowthLabel.POLYNOMIAL_BOUNDED),
        (XS, GrowthLabel.SUPER_POLYNOMIAL),
        (XS**2 / 2, GrowthLabel.SUPER_POLYNOMIAL),
        (-XS, GrowthLabel.RAPID_DECAY),
        (-(XS**1.5), GrowthLabel.RAPID_DECAY),
    ],
)
def test_growth_labels(values, label):
    assert growth_exponent(sample(values)).label is label


def test_polynomial_slope_is_reported():
    growth = growth_exponent(sample(3 * np.log(XS)))
    assert growth.slope == pytest.approx(3.0)
    assert growth.points == 64
    assert growth.rms == pytest.approx(0.0, abs=1e-9)


def test_steep_powers_are_not_tempered():
    assert growth_exponent(sample(80 * np.log(XS))).label is GrowthLabel.SUPER_POLYNOMIAL
    assert growth_exponent(sample(80 * np.log(XS)), slope_cap=100).tempered


def test_short_range_is_rejected():
    xs = np.geomspace(1.0, 10.0, 32)
    with pytest.raises(InsufficientRange, match="two decades"):
        growth_exponent(sample(np.log(xs), xs=xs))


def test_nan_values_are_dropped():
    xs = np.geomspace(1.0, 100.0, 16)
    values = np.log(xs)
    values[3] = np.nan
    with pytest.raises(InsufficientRange, match="15 finite values"):
        growth_exponent(sample(values, xs=xs))


def test_unusable_samples_are_rejected():
    with pytest.raises(InsufficientRange, match="unusable"):
        growth_exponent(sample(np.full(64, np.nan), usable=False, note="stiff"))


@pytest.mark.parametrize(
    "xs",
    [np.geomspace(1.0, 100.0, 8), np.full(16, 2.0)],
)
def test_sample_grid_is_validated(xs):
    with pytest.raises(ValueError):
        sample(np.zeros(len(xs)), xs=xs)
