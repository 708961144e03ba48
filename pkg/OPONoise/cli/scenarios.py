import logging
import math
from typing import Dict, List, Optional

import numpy
import pandas

from OPONoise.criteria import DbValue, Estimate, db_to_linear, error_agrees, evaluate_all, linear_to_db
from OPONoise.errors import DomainError, ValidationError
from OPONoise.fit import GridDescent, ObservationTable, ObservedQuantity
from OPONoise.gaussian import Quadrature, QuadratureSelector, generalized_variance
from OPONoise.model import NoisePoint, build_state_at, normalized_frequency, spectrum_sweep

from .HomodyneTrace import HomodyneTrace
from .RunConfig import RunConfig
from .SelectModeAction import MODE_LABELS

logger = logging.getLogger(__name__)

FIG2_FREQ_HZ = 20e6
FIG3_FREQ_HZ = 3.5e6
TARGETS = ("fig2", "fig3", "table1")
CRITERIA = ("mancini", "duan", "epr")

SPECTRA_COLUMNS = ["freq_hz", "omega", "g_x_db", "g_y_db", "v_ind_db", "g_x_err_db", "g_y_err_db"]
CRITERIA_COLUMNS = ["freq_hz", "mancini", "mancini_err", "duan", "duan_err", "epr", "epr_err", "epr_evaluable"]
TABLE1_COLUMNS = ["criterion", "model_value", "paper_value", "paper_err", "within_error"]
LOCKED_COLUMNS = ["freq_hz", "mode", "model_db", "measured_db", "measured_err_db", "within_error"]

# quantity locked on each rotated mode
_LOCKED_QUANTITY = {"+": ObservedQuantity.GY, "-": ObservedQuantity.GX}


def measured_point(config: RunConfig, freq_hz: float) -> NoisePoint:
    """Noise record built from the measured dB levels at one frequency.

    Args:
        config (RunConfig): Configuration holding the measurements.
        freq_hz (float): Analysis frequency; G_X, G_Y and V_ind must all be measured there.

    Returns:
        NoisePoint: Measured variances in shot-noise units, errors converted from dB.
    """
    measured = {observation.quantity: observation.measured
                for observation in config.measurements.at_frequency(freq_hz)}
    missing = [quantity.value for quantity in ObservedQuantity if quantity not in measured]
    if missing:
        raise DomainError(f"No measured {missing} at {freq_hz:g} Hz in {config.measurements.filename}.")
    g_x = db_to_linear(measured[ObservedQuantity.GX])
    g_y = db_to_linear(measured[ObservedQuantity.GY])
    v_ind = db_to_linear(measured[ObservedQuantity.VIND])
    return NoisePoint(freq_hz, normalized_frequency(freq_hz, config.opo), g_x.value, g_y.value,
                      v_ind.value, v_ind.value, g_x.err, g_y.err, v_ind.err, v_ind.err)


def criteria_point(config: RunConfig, freq_hz: float, source: str) -> NoisePoint:
    if source == "measured":
        return measured_point(config, freq_hz)
    if source == "model":
        return config.model_point(freq_hz)
    raise ValidationError(f"Source must be 'measured' or 'model', got {source!r}.", "source")


def run_spectra(config: RunConfig, min_hz: Optional[float] = None, max_hz: Optional[float] = None,
                points: Optional[int] = None) -> pandas.DataFrame:
    """Sweep the detected noise spectra over a linear frequency grid.

    Args:
        config (RunConfig): Model configuration.
        min_hz (Optional[float]): Lowest frequency, overrides `spectra.min`.
        max_hz (Optional[float]): Highest frequency, overrides `spectra.max`.
        points (Optional[int]): Number of frequencies, overrides `spectra.points`.

    Returns:
        pandas.DataFrame: One row per frequency, levels in dB.
    """
    min_hz = config.spectra.min_hz if min_hz is None else min_hz
    max_hz = config.spectra.max_hz if max_hz is None else max_hz
    points = config.spectra.points if points is None else points
    if points < 1:
        raise ValidationError(f"Number of points must be >= 1, got {points}.", "points")
    if min_hz > max_hz:
        raise ValidationError(f"Sweep minimum {min_hz:g} Hz exceeds maximum {max_hz:g} Hz.", "min")

    sweep = spectrum_sweep(numpy.linspace(min_hz, max_hz, points), config.opo, config.pump,
                           config.detection, config.v_ind_table)
    rows = []
    for point in sweep:
        g_x = linear_to_db(Estimate(point.g_x, point.err_g_x))
        g_y = linear_to_db(Estimate(point.g_y, point.err_g_y))
        rows.append([point.freq_hz, point.omega, g_x.db, g_y.db, 10.0 * math.log10(point.v_ind_x),
                     g_x.err_db, g_y.err_db])
    return pandas.DataFrame(rows, columns=SPECTRA_COLUMNS)


def run_criteria(config: RunConfig, freq_hz: Optional[float] = None,
                 source: Optional[str] = None) -> pandas.DataFrame:
    """Evaluate the three criteria at one frequency.

    Args:
        config (RunConfig): Configuration.
        freq_hz (Optional[float]): Overrides `criteria.freq`.
        source (Optional[str]): 'measured' or 'model', overrides `criteria.source`.

    Returns:
        pandas.DataFrame: A single row; the EPR columns are empty when not evaluable.
    """
    freq_hz = config.criteria_freq_hz if freq_hz is None else freq_hz
    source = config.criteria_source if source is None else source
    result = evaluate_all(criteria_point(config, freq_hz, source))
    epr = result.epr
    row = [freq_hz, result.mancini.value, result.mancini.err, result.duan.value, result.duan.err,
           numpy.nan if epr is None else epr.value, numpy.nan if epr is None else epr.err,
           result.epr_evaluable]
    return pandas.DataFrame([row], columns=CRITERIA_COLUMNS)


def homodyne_trace(point: NoisePoint, mode: str, phase_points: int,
                   rbw_hz: float = 0.0, vbw_hz: float = 0.0) -> HomodyneTrace:
    """Variance of a rotated mode over a uniform local-oscillator phase grid.

    Args:
        point (NoisePoint): Detected noise record; it must rebuild into a physical state.
        mode (str): '+' or '-'.
        phase_points (int): Number of phases in [0, 2π).
        rbw_hz (float): Resolution bandwidth label.
        vbw_hz (float): Video bandwidth label.

    Returns:
        HomodyneTrace: π-periodic trace whose minimum is the locked variance of the mode.
    """
    state = build_state_at(point)
    phases = numpy.linspace(0.0, 2 * math.pi, phase_points, endpoint=False)
    variances = [generalized_variance(state, QuadratureSelector(mode, Quadrature.X, float(phase)))
                 for phase in phases]
    return HomodyneTrace(phases, numpy.array(variances), mode, point.freq_hz, rbw_hz, vbw_hz)


def run_trace(config: RunConfig, freq_hz: Optional[float] = None, mode: Optional[str] = None) -> HomodyneTrace:
    """ Model trace of a rotated mode; `mode` is '+' or '-' and defaults to `trace.mode`. """
    freq_hz = config.trace.freq_hz if freq_hz is None else freq_hz
    mode = MODE_LABELS[config.trace.mode] if mode is None else mode
    return homodyne_trace(config.model_point(freq_hz), mode, config.trace.phase_points,
                          config.trace.rbw_hz, config.trace.vbw_hz)


def run_fit(config: RunConfig, free_params: Optional[List[str]] = None,
            observations: Optional[ObservationTable] = None) -> pandas.DataFrame:
    """Fit the free parameters and report them in a single row.

    Args:
        config (RunConfig): Configuration with the `fit` section.
        free_params (Optional[List[str]]): Overrides `fit.free_params`.
        observations (Optional[ObservationTable]): Fit all observations of this table.

    Returns:
        pandas.DataFrame: Columns for each free parameter, then objective, converged and evaluations.
    """
    problem = config.fit_problem(free_params, observations)
    result = GridDescent().fit(problem)
    if not result.converged:
        logger.warning("Fit stopped after %d iterations without converging.", problem.max_iterations)
    logger.info("Fit residuals: %s", numpy.array2string(result.residuals, precision=4))
    row = dict(result.best_params)
    row.update(objective=result.objective, converged=result.converged, evaluations=result.evaluations)
    return pandas.DataFrame([row])


def locked_quadratures(config: RunConfig, freq_hz: float) -> pandas.DataFrame:
    """Compare the modelled locked variances of A₊ and A₋ with the measured ones.

    Rows without a measurement at `freq_hz` have empty measured columns and
    `within_error` False. A model level outside the measured error is logged as a warning.
    """
    point = config.model_point(freq_hz)
    modelled = {ObservedQuantity.GX: point.g_x, ObservedQuantity.GY: point.g_y}
    measured = {observation.quantity: observation.measured
                for observation in config.measurements.at_frequency(freq_hz)}
    rows = []
    for mode in ("+", "-"):
        quantity = _LOCKED_QUANTITY[mode]
        model_db = 10.0 * math.log10(modelled[quantity])
        level: Optional[DbValue] = measured.get(quantity)
        if level is None:
            rows.append([freq_hz, mode, model_db, numpy.nan, numpy.nan, False])
            continue
        err_db = level.err_db or 0.0
        within = abs(model_db - level.db) <= err_db
        if not within:
            logger.warning("Modelled locked variance of A%s at %g Hz is %.2f dB, measured %.2f +- %.2f dB.",
                           mode, freq_hz, model_db, level.db, err_db)
        rows.append([freq_hz, mode, model_db, level.db,
                     numpy.nan if level.err_db is None else level.err_db, within])
    return pandas.DataFrame(rows, columns=LOCKED_COLUMNS)


def table1(config: RunConfig, source: Optional[str] = None) -> pandas.DataFrame:
    """Compare the criteria at 20 MHz with the reported values.

    Args:
        config (RunConfig): Configuration with `reported_criteria`.
        source (Optional[str]): 'measured' or 'model', overrides `criteria.source`.

    Returns:
        pandas.DataFrame: One row per criterion.
    """
    source = config.criteria_source if source is None else source
    result = evaluate_all(criteria_point(config, FIG2_FREQ_HZ, source))
    estimates = {"mancini": result.mancini, "duan": result.duan, "epr": result.epr}
    rows = []
    for name in CRITERIA:
        estimate = estimates[name]
        reported = config.reported_criteria.get(name)
        model_value = numpy.nan if estimate is None else estimate.value
        if reported is None:
            rows.append([name, model_value, numpy.nan, numpy.nan, False])
            continue
        within = estimate is not None and abs(estimate.value - reported.value) <= reported.err
        if estimate is not None and reported.err > 0.0 and not error_agrees(estimate.err, reported.err):
            logger.warning("Propagated %s error %.3g differs from the reported %.3g by more than 30%%.",
                           name, estimate.err, reported.err)
        rows.append([name, model_value, reported.value, reported.err, within])
    return pandas.DataFrame(rows, columns=TABLE1_COLUMNS)


def run_reproduce(config: RunConfig, target: str, source: Optional[str] = None) -> Dict[str, pandas.DataFrame]:
    """Produce the data behind one published figure or table.

    Args:
        config (RunConfig): Configuration.
        target (str): 'fig2', 'fig3' or 'table1'.
        source (Optional[str]): Data source of the criteria, see `run_criteria`.

    Returns:
        Dict[str, pandas.DataFrame]: Artifacts by name, in output order.
    """
    if target == "fig2":
        return {
            "locked": locked_quadratures(config, FIG2_FREQ_HZ),
            "criteria": run_criteria(config, FIG2_FREQ_HZ, source),
        }
    if target == "fig3":
        frames = []
        for mode in ("+", "-"):
            frame = run_trace(config, FIG3_FREQ_HZ, mode).to_dataframe()
            frame.insert(0, "mode", mode)
            frames.append(frame)
        return {
            "trace": pandas.concat(frames, ignore_index=True),
            "locked": locked_quadratures(config, FIG3_FREQ_HZ),
        }
    if target == "table1":
        return {"table1": table1(config, source)}
    raise ValidationError(f"Target must be one of {list(TARGETS)}, got {target!r}.", "target")
