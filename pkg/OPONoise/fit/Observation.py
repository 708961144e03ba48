from dataclasses import dataclass
from enum import Enum
from typing import Optional

from OPONoise.criteria import DbValue
from OPONoise.errors import ValidationError


class ObservedQuantity(Enum):
    GX = "GX"
    GY = "GY"
    VIND = "VIND"


@dataclass(frozen=True)
class Observation:
    """ A measured noise level at one analysis frequency. """
    freq_hz: float
    quantity: ObservedQuantity
    measured: DbValue
    label: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.quantity, str):
            try:
                object.__setattr__(self, "quantity", ObservedQuantity(self.quantity.strip().upper()))
            except ValueError as error:
                raise ValidationError(
                    f"Quantity must be one of ['GX', 'GY', 'VIND'], got {self.quantity!r}.", "quantity") from error
        if not self.freq_hz > 0.0:
            raise ValidationError(f"Observation frequency must be > 0, got {self.freq_hz}.", "freq_hz")
