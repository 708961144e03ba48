import logging
import math
from typing import List, Sequence

from OPONoise.errors import DomainError, OPONoiseError, SweepError
from OPONoise.gaussian import TwoModeCovariance, build_covariance, minimum_individual_variance
from OPONoise.utils import is_sorted

from .DetectionChain import DetectionChain
from .FrequencyTable import FrequencyTable
from .NoisePoint import NoisePoint
from .OpoParams import OpoParams
from .PumpNoiseModel import PumpNoiseModel

logger = logging.getLogger(__name__)


def normalized_frequency(freq_hz: float, params: OpoParams) -> float:
    """Normalize an analysis frequency to the half-width of the OPO cavity.

    The Lorentzian 1/(1 + Ω²) of the spectra thus reaches one half at the cavity
    half-width.

    Args:
        freq_hz (float): Analysis frequency in Hz.
        params (OpoParams): OPO parameters providing the cavity linewidth.

    Returns:
        float: Ω = freq_hz / (cavity_fwhm_hz / 2).
    """
    if not freq_hz >= 0.0:
        raise DomainError(f"Analysis frequency must be >= 0, got {freq_hz}.")
    return freq_hz / (params.cavity_fwhm_hz / 2.0)


def g_x_spectrum(omega: float, params: OpoParams) -> float:
    """ Variance of X- at the OPO output: 1 - T/(T+μ) · 1/(1 + Ω²). """
    if params.t_out + params.mu_loss == 0.0:
        raise DomainError("G_X is undefined for t_out + mu_loss == 0.")
    return 1.0 - params.escape_efficiency / (1.0 + omega ** 2)


def g_y_spectrum(omega: float, params: OpoParams, v0_at_freq: float) -> float:
    """Variance of Y+ at the OPO output, degraded by pump phase noise.

    G_Y = 1 - T/(T+μ) · [1 - 2(V₀ - 1)(σ - 1)] / (Ω² + σ²). For σ = 1 it equals G_X;
    for V₀ > 1 + 1/(2(σ - 1)) it exceeds 1.

    Args:
        omega (float): Normalized analysis frequency Ω.
        params (OpoParams): OPO parameters.
        v0_at_freq (float): Pump phase noise reaching the OPO at this frequency.

    Returns:
        float: G_Y in shot-noise units.
    """
    if not v0_at_freq >= 1.0:
        raise DomainError(f"Pump phase noise must be >= 1 (shot noise), got {v0_at_freq}.")
    if params.t_out + params.mu_loss == 0.0:
        raise DomainError("G_Y is undefined for t_out + mu_loss == 0.")
    numerator = 1.0 - 2.0 * (v0_at_freq - 1.0) * (params.sigma_pump - 1.0)
    return 1.0 - params.escape_efficiency * numerator / (omega ** 2 + params.sigma_pump ** 2)


def filter_transmission(freq_hz: float, noise: PumpNoiseModel) -> float:
    """ Fraction of the excess pump noise at `freq_hz` passed by the filtering cavity. """
    if not noise.filter_enabled:
        return 1.0
    return 1.0 / (1.0 + (freq_hz / (noise.filter_fwhm_hz / 2.0)) ** 2)


def filtered_pump_noise(freq_hz: float, noise: PumpNoiseModel) -> float:
    """Pump phase noise after the filtering cavity.

    Only the excess above shot noise is filtered, with a Lorentzian of the cavity
    linewidth: V₀ = 1 + (V₀_raw - 1) / (1 + (f / (FWHM/2))²).

    Args:
        freq_hz (float): Analysis frequency in Hz.
        noise (PumpNoiseModel): Pump noise and filtering cavity.

    Returns:
        float: Pump phase noise in shot-noise units, never below 1.
    """
    if not freq_hz >= 0.0:
        raise DomainError(f"Analysis frequency must be >= 0, got {freq_hz}.")
    v0_raw = noise.v0_raw(freq_hz)
    return 1.0 + (v0_raw - 1.0) * filter_transmission(freq_hz, noise)


def apply_detection(variance_source: float, chain: DetectionChain) -> float:
    """Map a source variance to the measured one through the detection losses.

    Args:
        variance_source (float): Variance at the OPO output.
        chain (DetectionChain): Detection imperfections.

    Returns:
        float: η V + (1 - η).
    """
    if not variance_source > 0.0:
        raise DomainError(f"Source variance must be positive, got {variance_source}.")
    efficiency = chain.efficiency
    return efficiency * variance_source + (1.0 - efficiency)


def _spectrum_errors(omega: float, freq_hz: float, params: OpoParams, noise: PumpNoiseModel,
                     v0: float, efficiency: float):
    """ First-order errors of the detected G_X and G_Y from the μ and V₀_raw uncertainties. """
    d_escape_d_mu = -params.t_out / (params.t_out + params.mu_loss) ** 2
    denominator_y = omega ** 2 + params.sigma_pump ** 2
    numerator_y = 1.0 - 2.0 * (v0 - 1.0) * (params.sigma_pump - 1.0)

    d_gx_d_mu = -d_escape_d_mu / (1.0 + omega ** 2)
    d_gy_d_mu = -d_escape_d_mu * numerator_y / denominator_y
    d_gy_d_v0 = params.escape_efficiency * 2.0 * (params.sigma_pump - 1.0) / denominator_y
    d_gy_d_v0_raw = d_gy_d_v0 * filter_transmission(freq_hz, noise)

    err_g_x = efficiency * abs(d_gx_d_mu) * params.mu_loss_err
    err_g_y = efficiency * math.hypot(d_gy_d_mu * params.mu_loss_err, d_gy_d_v0_raw * noise.v0_raw_err)
    return err_g_x, err_g_y


def noise_point(freq_hz: float, params: OpoParams, noise: PumpNoiseModel, chain: DetectionChain,
                v_ind_model: FrequencyTable, enforce_physical: bool = True) -> NoisePoint:
    """Predict the detected noise record at one analysis frequency.

    Args:
        freq_hz (float): Analysis frequency in Hz.
        params (OpoParams): OPO parameters.
        noise (PumpNoiseModel): Pump noise and filtering cavity.
        chain (DetectionChain): Detection imperfections.
        v_ind_model (FrequencyTable): Individual-beam variance at the OPO output.
        enforce_physical (bool): Raise the individual variance to the smallest value
            compatible with the detected G_X and G_Y.

    Returns:
        NoisePoint: Detected variances with propagated uncertainties.
    """
    omega = normalized_frequency(freq_hz, params)
    v0 = filtered_pump_noise(freq_hz, noise)
    g_x = apply_detection(g_x_spectrum(omega, params), chain)
    g_y = apply_detection(g_y_spectrum(omega, params, v0), chain)
    v_ind = apply_detection(v_ind_model(freq_hz), chain)
    err_v_ind = chain.efficiency * v_ind_model.error_at(freq_hz)

    if enforce_physical:
        v_min = minimum_individual_variance(g_x, g_y)
        if v_ind < v_min:
            logger.info("Raised individual-beam variance at %g Hz from %g to the physical minimum %g.",
                        freq_hz, v_ind, v_min)
            v_ind = v_min

    err_g_x, err_g_y = _spectrum_errors(omega, freq_hz, params, noise, v0, chain.efficiency)
    return NoisePoint(freq_hz, omega, g_x, g_y, v_ind, v_ind, err_g_x, err_g_y, err_v_ind, err_v_ind)


def spectrum_sweep(freqs: Sequence[float], params: OpoParams, noise: PumpNoiseModel, chain: DetectionChain,
                   v_ind_model: FrequencyTable, enforce_physical: bool = True) -> List[NoisePoint]:
    """Evaluate the detected noise spectra over a list of frequencies.

    Args:
        freqs (Sequence[float]): Non-empty, ascending analysis frequencies in Hz.
        params (OpoParams): OPO parameters.
        noise (PumpNoiseModel): Pump noise and filtering cavity.
        chain (DetectionChain): Detection imperfections.
        v_ind_model (FrequencyTable): Individual-beam variance at the OPO output.
        enforce_physical (bool): See `noise_point`.

    Returns:
        List[NoisePoint]: One point per frequency, in input order.
    """
    if len(freqs) == 0:
        raise DomainError("Frequency list of a sweep must not be empty.")
    if not is_sorted(freqs):
        raise DomainError("Frequencies of a sweep have to be sorted in ascending order.")

    points = []
    for freq_hz in freqs:
        try:
            points.append(noise_point(float(freq_hz), params, noise, chain, v_ind_model, enforce_physical))
        except OPONoiseError as error:
            raise SweepError(f"Sweep failed at {freq_hz:g} Hz: {error}", float(freq_hz)) from error
    return points


def build_state_at(point: NoisePoint, validate: bool = True) -> TwoModeCovariance:
    """ Two-mode state reproducing the variances of a noise record. """
    return build_covariance(point.g_x, point.g_y, point.v_ind_x, point.v_ind_y, validate)
