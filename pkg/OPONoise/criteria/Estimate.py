import math
from dataclasses import dataclass

from OPONoise.errors import ValidationError


@dataclass(frozen=True)
class Estimate:
    """ A value with its 1-σ uncertainty. """
    value: float
    err: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValidationError(f"Estimate value must be finite, got {self.value}.", "value")
        if not (math.isfinite(self.err) and self.err >= 0.0):
            raise ValidationError(f"Estimate error must be finite and >= 0, got {self.err}.", "err")

    def __str__(self) -> str:
        return f"{self.value:.4g} ± {self.err:.2g}"
