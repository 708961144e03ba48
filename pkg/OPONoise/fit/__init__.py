import logging

from .FitProblem import DEFAULT_BOUNDS, FREE_PARAMETERS, FitProblem
from .FitResult import FitResult
from .GridDescent import GridDescent, fit
from .Observation import Observation, ObservedQuantity
from .ObservationTable import ObservationTable
from .objective import apply_candidate, objective, predict_db, residuals

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "DEFAULT_BOUNDS",
    "FREE_PARAMETERS",
    "FitProblem",
    "FitResult",
    "GridDescent",
    "Observation",
    "ObservedQuantity",
    "ObservationTable",
    "apply_candidate",
    "fit",
    "objective",
    "predict_db",
    "residuals",
]
