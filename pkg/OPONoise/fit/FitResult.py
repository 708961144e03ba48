from dataclasses import dataclass
from typing import Dict

import numpy


@dataclass(frozen=True)
class FitResult:
    """ Outcome of a fit.

    `residuals` are (predicted - measured)/err in dB, one per observation.
    `converged` is False when the iteration limit stopped the refinement.
    """
    best_params: Dict[str, float]
    residuals: numpy.ndarray
    objective: float
    converged: bool
    evaluations: int
