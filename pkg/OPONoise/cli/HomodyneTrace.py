import math
from dataclasses import dataclass

import numpy
import pandas

from OPONoise.errors import ValidationError
from OPONoise.utils import is_sorted


@dataclass(frozen=True)
class HomodyneTrace:
    """ Variance of one rotated mode while the local-oscillator phase is scanned.

    `rbw_hz` and `vbw_hz` label the spectrum-analyzer settings of the trace; no
    smoothing is applied.
    """
    phases: numpy.ndarray
    variances: numpy.ndarray
    mode: str
    freq_hz: float
    rbw_hz: float
    vbw_hz: float

    def __post_init__(self):
        phases = numpy.array(self.phases, dtype=float)
        variances = numpy.array(self.variances, dtype=float)
        if phases.ndim != 1 or len(phases) == 0 or phases.shape != variances.shape:
            raise ValidationError("Phases and variances must be non-empty and of equal length.", "phases")
        if not (phases[0] >= 0.0 and phases[-1] < 2 * math.pi):
            raise ValidationError("Phases must lie within [0, 2π).", "phases")
        if len(phases) > 1 and (not is_sorted(phases) or numpy.any(numpy.diff(phases) == 0.0)):
            raise ValidationError("Phases must be strictly increasing.", "phases")
        if not numpy.all(variances > 0.0):
            raise ValidationError("Trace variances must be positive.", "variances")
        if self.mode not in ("+", "-"):
            raise ValidationError(f"Trace mode must be '+' or '-', got {self.mode!r}.", "mode")
        object.__setattr__(self, "phases", phases)
        object.__setattr__(self, "variances", variances)

    @property
    def minimum(self) -> float:
        return float(self.variances.min())

    def to_dataframe(self) -> pandas.DataFrame:
        return pandas.DataFrame({
            "phase_rad": self.phases,
            "variance": self.variances,
            "variance_db": 10.0 * numpy.log10(self.variances),
        })
