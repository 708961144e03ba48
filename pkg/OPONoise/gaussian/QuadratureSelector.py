import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from OPONoise.errors import ValidationError

from .ModeBasis import ModeBasis


class Quadrature(Enum):
    X = "X"
    Y = "Y"


@dataclass(frozen=True)
class QuadratureSelector:
    """ Selects the generalized quadrature X_m cos(phase) + Y_m sin(phase) of mode m.

    With `quadrature=Y` the selected observable is shifted by a quarter period, so
    `QuadratureSelector("1", Quadrature.Y)` is Y1.
    """
    mode: Union[str, int]
    quadrature: Quadrature = Quadrature.X
    phase: float = 0.0

    def __post_init__(self):
        mode = str(self.mode)
        if mode not in ("1", "2", "+", "-"):
            raise ValidationError(f"Mode must be one of ['1', '2', '+', '-'], got {self.mode!r}.", "mode")
        object.__setattr__(self, "mode", mode)
        if isinstance(self.quadrature, str):
            object.__setattr__(self, "quadrature", Quadrature(self.quadrature))
        if not 0.0 <= self.phase < 2 * math.pi:
            raise ValidationError(f"Phase must lie in [0, 2π), got {self.phase}.", "phase")

    @property
    def basis(self) -> ModeBasis:
        if self.mode in ModeBasis.SignalIdler.mode_labels:
            return ModeBasis.SignalIdler
        return ModeBasis.RotatedPlusMinus

    @property
    def mode_index(self) -> int:
        """ Position of the mode in its own basis (0 or 1). """
        return self.basis.mode_labels.index(self.mode)

    @property
    def angle(self) -> float:
        """ Total quadrature angle, including the quarter period of a Y selection. """
        if self.quadrature is Quadrature.Y:
            return self.phase + math.pi / 2
        return self.phase
