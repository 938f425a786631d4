"""Growth classification of log|u| samples."""

import logging

import numpy as np

from regsym.errors import InsufficientRange
from regsym.models.growth import MIN_SAMPLE_POINTS, GrowthClass, GrowthLabel, GrowthSample

logger = logging.getLogger(__name__)

MIN_DECADES = 2.0
FIT_TOL = 0.05


def growth_exponent(sample: GrowthSample, slope_cap: float = 50.0, fit_tol: float = FIT_TOL) -> GrowthClass:
    """
    Classify the growth of a sample.

    log|u| is regressed against log x and against x. A good log-log fit (rms residual at most fit_tol * (1 + |slope|))
    with |slope| <= slope_cap reads as polynomially bounded; otherwise the sign of the trend decides between
    super-polynomial growth and rapid decay.

    Parameters
    ----------
    sample : GrowthSample
        At least 16 finite values spanning at least two decades.
    slope_cap : float
        Largest power still read as polynomially bounded.
    fit_tol : float
        Relative rms threshold of the log-log fit.

    Raises
    ------
    InsufficientRange
        For unusable samples and samples that are too short.
    """
    if not sample.usable:
        raise InsufficientRange(f"sample is unusable: {sample.note}")
    xs = np.asarray(sample.xs, dtype=float)
    logs = np.asarray(sample.log_abs_u, dtype=float)
    finite = np.isfinite(logs)
    xs, logs = xs[finite], logs[finite]
    if xs.size < MIN_SAMPLE_POINTS:
        raise InsufficientRange(f"only {xs.size} finite values, at least {MIN_SAMPLE_POINTS} are needed")
    if np.log10(xs[-1] / xs[0]) < MIN_DECADES:
        raise InsufficientRange(f"the sample spans [{xs[0]:.6g}, {xs[-1]:.6g}], less than two decades")

    log_x = np.log(xs)
    slope, intercept = np.polyfit(log_x, logs, 1)
    rms = float(np.sqrt(np.mean((logs - (slope * log_x + intercept)) ** 2)))
    linear_slope = float(np.polyfit(xs, logs, 1)[0])

    if rms <= fit_tol * (1 + abs(slope)) and abs(slope) <= slope_cap:
        label = GrowthLabel.POLYNOMIAL_BOUNDED
    elif (linear_slope if rms > fit_tol * (1 + abs(slope)) else slope) > 0:
        label = GrowthLabel.SUPER_POLYNOMIAL
    else:
        label = GrowthLabel.RAPID_DECAY
    logger.debug("growth %s: slope %.4g, linear slope %.4g, rms %.3g", label.value, slope, linear_slope, rms)
    return GrowthClass(label=label, slope=float(slope), linear_slope=linear_slope, rms=rms, points=int(xs.size))
