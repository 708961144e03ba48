import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

from OPONoise.errors import ValidationError
from OPONoise.model import DetectionChain, FrequencyTable, OpoParams, PumpNoiseModel

from .Observation import Observation

FREE_PARAMETERS = ("mu_loss", "v0_raw_level", "v_ind_level")
LOG_SPACED = frozenset(["mu_loss", "v0_raw_level"])
DEFAULT_BOUNDS = {
    "mu_loss": (1e-4, 0.5),
    "v0_raw_level": (1.0, 1000.0),
    "v_ind_level": (1.0, 100.0),
}
MIN_GRID_POINTS = 32


@dataclass(frozen=True)
class FitProblem:
    """ Least-squares problem: which parameters to adjust to which observations.

    Everything not listed in `free_params` keeps the value given by `params`, `pump`,
    `chain` and `v_ind_model`. Free `v0_raw_level` and `v_ind_level` replace the
    corresponding tables by constants.
    """
    observations: Tuple[Observation, ...]
    free_params: Tuple[str, ...]
    params: OpoParams
    pump: PumpNoiseModel
    chain: DetectionChain
    v_ind_model: FrequencyTable
    bounds: Dict[str, Tuple[float, float]] = field(default_factory=dict)
    grid_points: int = MIN_GRID_POINTS
    max_iterations: int = 200
    tolerance: float = 1e-10

    def __post_init__(self):
        object.__setattr__(self, "observations", tuple(self.observations))
        object.__setattr__(self, "free_params", tuple(self.free_params))
        bounds = {name: tuple(DEFAULT_BOUNDS[name]) for name in self.free_params if name in DEFAULT_BOUNDS}
        bounds.update({name: tuple(value) for name, value in self.bounds.items()})
        object.__setattr__(self, "bounds", bounds)
        self._validate_input()

    def _validate_input(self):
        if len(self.free_params) == 0:
            raise ValidationError("At least one free parameter is required.", "free_params")
        unknown = [name for name in self.free_params if name not in FREE_PARAMETERS]
        if unknown:
            raise ValidationError(f"Free parameters must be among {list(FREE_PARAMETERS)}, got {unknown}.",
                                  "free_params")
        if len(set(self.free_params)) != len(self.free_params):
            raise ValidationError("Free parameters must not repeat.", "free_params")
        for name in self.free_params:
            lo, hi = self.bounds[name]
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise ValidationError(f"Bounds of {name} must be finite with lo < hi, got [{lo}, {hi}].", "bounds")
            if name in LOG_SPACED and lo <= 0.0:
                raise ValidationError(f"Bounds of {name} must be positive for a log-spaced grid.", "bounds")
        if self.grid_points < MIN_GRID_POINTS:
            raise ValidationError(f"grid_points must be >= {MIN_GRID_POINTS}, got {self.grid_points}.", "grid_points")
        if self.max_iterations < 1:
            raise ValidationError("max_iterations must be >= 1.", "max_iterations")
        if not self.tolerance > 0.0:
            raise ValidationError("tolerance must be > 0.", "tolerance")
