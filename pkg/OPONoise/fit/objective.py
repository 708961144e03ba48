import math
from dataclasses import replace
from typing import Sequence, Tuple

import numpy

from OPONoise.errors import OPONoiseError, ValidationError
from OPONoise.model import DetectionChain, FrequencyTable, OpoParams, PumpNoiseModel, noise_point

from .FitProblem import FitProblem
from .Observation import ObservedQuantity, Observation

DEFAULT_ERR_DB = 1.0


def apply_candidate(candidate: Sequence[float],
                    problem: FitProblem) -> Tuple[OpoParams, PumpNoiseModel, FrequencyTable]:
    """Insert candidate values of the free parameters into the fixed model.

    Args:
        candidate (Sequence[float]): Values ordered as `problem.free_params`.
        problem (FitProblem): Problem defining the fixed model.

    Returns:
        Tuple[OpoParams, PumpNoiseModel, FrequencyTable]: Model with the candidate applied.
    """
    if len(candidate) != len(problem.free_params):
        raise ValidationError(
            f"Candidate has {len(candidate)} values for {len(problem.free_params)} free parameters.", "candidate")

    params, pump, v_ind_model = problem.params, problem.pump, problem.v_ind_model
    for name, value in zip(problem.free_params, candidate):
        lo, hi = problem.bounds[name]
        if not lo <= value <= hi:
            raise ValidationError(f"Candidate {name}={value} lies outside [{lo}, {hi}].", name)
        if name == "mu_loss":
            params = replace(params, mu_loss=float(value))
        elif name == "v0_raw_level":
            pump = replace(pump, v0_raw=FrequencyTable.constant(float(value)))
        elif name == "v_ind_level":
            v_ind_model = FrequencyTable.constant(float(value))
    return params, pump, v_ind_model


def predict_db(observation: Observation, params: OpoParams, pump: PumpNoiseModel,
               chain: DetectionChain, v_ind_model: FrequencyTable) -> float:
    """ Detected level in dB of the observed quantity, as predicted by the model. """
    point = noise_point(observation.freq_hz, params, pump, chain, v_ind_model, enforce_physical=False)
    if observation.quantity is ObservedQuantity.GX:
        value = point.g_x
    elif observation.quantity is ObservedQuantity.GY:
        value = point.g_y
    else:
        value = point.v_ind_x
    return 10.0 * math.log10(value)


def residuals(candidate: Sequence[float], problem: FitProblem) -> numpy.ndarray:
    """Weighted residuals (predicted - measured)/err in dB.

    Observations without an error are weighted with an error of 1 dB.
    """
    params, pump, v_ind_model = apply_candidate(candidate, problem)
    values = []
    for observation in problem.observations:
        err_db = observation.measured.err_db or DEFAULT_ERR_DB
        predicted = predict_db(observation, params, pump, problem.chain, v_ind_model)
        values.append((predicted - observation.measured.db) / err_db)
    return numpy.array(values, dtype=float)


def objective(candidate: Sequence[float], problem: FitProblem) -> float:
    """Weighted sum of squares of the residuals.

    Args:
        candidate (Sequence[float]): Values ordered as `problem.free_params`, within bounds.
        problem (FitProblem): Observations and fixed model.

    Returns:
        float: Non-negative objective, or infinity when the model is undefined at the candidate.
    """
    apply_candidate(candidate, problem)
    try:
        return float(numpy.sum(residuals(candidate, problem) ** 2))
    except OPONoiseError:
        return math.inf
