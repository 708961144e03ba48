import logging

from OPONoise.errors import DomainError, ValidationError
from OPONoise.gaussian import (Quadrature, QuadratureSelector, TwoModeCovariance, build_covariance, check_physical,
                               conditional_variance)
from OPONoise.model import NoisePoint

from .CriteriaResult import CriteriaResult
from .Duan import Duan
from .EPR import EPR
from .Estimate import Estimate
from .Mancini import Mancini

logger = logging.getLogger(__name__)

ROUTE_TOLERANCE = 1e-10
REPORTED_ERROR_TOLERANCE = 0.3

X1 = QuadratureSelector("1", Quadrature.X)
X2 = QuadratureSelector("2", Quadrature.X)
Y1 = QuadratureSelector("1", Quadrature.Y)
Y2 = QuadratureSelector("2", Quadrature.Y)


def mancini(g_x: Estimate, g_y: Estimate) -> Estimate:
    return Mancini().compute(g_x, g_y)


def duan(g_x: Estimate, g_y: Estimate) -> Estimate:
    return Duan().compute(g_x, g_y)


def epr_closed_form(g_x: Estimate, g_y: Estimate, v_x: Estimate, v_y: Estimate) -> Estimate:
    return EPR().compute(g_x, g_y, v_x, v_y)


def epr_from_covariance(cov: TwoModeCovariance) -> float:
    """Reid criterion V(X1|X2) · V(Y1|Y2) from the conditional variances of a state.

    Args:
        cov (TwoModeCovariance): Two-mode state in either basis.

    Returns:
        float: Product of the two conditional variances.
    """
    return conditional_variance(cov, X1, X2) * conditional_variance(cov, Y1, Y2)


def evaluate_all(point: NoisePoint) -> CriteriaResult:
    """Evaluate the Mancini, Duan and EPR criteria for one noise record.

    The EPR value comes from the closed form. When the record rebuilds into a
    physical state, the conditional-variance route is evaluated as a cross-check.

    Args:
        point (NoisePoint): Variances with uncertainties.

    Returns:
        CriteriaResult: Values, errors and verdicts.
    """
    g_x = Estimate(point.g_x, point.err_g_x)
    g_y = Estimate(point.g_y, point.err_g_y)
    v_x = Estimate(point.v_ind_x, point.err_v_ind_x)
    v_y = Estimate(point.v_ind_y, point.err_v_ind_y)

    try:
        epr = epr_closed_form(g_x, g_y, v_x, v_y)
    except DomainError as error:
        logger.info("EPR criterion not evaluable at %g Hz: %s", point.freq_hz, error)
        epr = None

    state_physical = False
    epr_covariance = None
    try:
        state = build_covariance(point.g_x, point.g_y, point.v_ind_x, point.v_ind_y, validate=False)
        state_physical = check_physical(state).physical
    except ValidationError:
        pass
    if state_physical:
        epr_covariance = epr_from_covariance(state)
        if epr is not None and abs(epr_covariance - epr.value) > ROUTE_TOLERANCE:
            logger.warning("EPR closed form %.12g and covariance route %.12g disagree at %g Hz.",
                           epr.value, epr_covariance, point.freq_hz)

    return CriteriaResult(mancini(g_x, g_y), duan(g_x, g_y), epr, state_physical, epr_covariance)


def error_agrees(propagated: float, reported: float, tolerance: float = REPORTED_ERROR_TOLERANCE) -> bool:
    """Check whether a propagated error lies within a relative band around a reported one.

    Args:
        propagated (float): Error obtained by first-order propagation.
        reported (float): Error quoted alongside a measured value.
        tolerance (float): Allowed relative deviation.

    Returns:
        bool: True if |propagated - reported| <= tolerance · reported.
    """
    return abs(propagated - reported) <= tolerance * reported
