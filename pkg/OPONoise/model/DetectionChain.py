from dataclasses import dataclass

from OPONoise.errors import ValidationError


@dataclass(frozen=True)
class DetectionChain:
    """ Imperfections of the homodyne detection, lumped into one efficiency. """
    quantum_efficiency: float
    visibility: float
    extra_electronic_loss: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.quantum_efficiency <= 1.0:
            raise ValidationError(
                f"quantum_efficiency must lie in (0, 1], got {self.quantum_efficiency}.", "quantum_efficiency")
        if not 0.0 < self.visibility <= 1.0:
            raise ValidationError(f"visibility must lie in (0, 1], got {self.visibility}.", "visibility")
        if not 0.0 <= self.extra_electronic_loss < 1.0:
            raise ValidationError(
                f"extra_electronic_loss must lie in [0, 1), got {self.extra_electronic_loss}.",
                "extra_electronic_loss")

    @classmethod
    def ideal(cls) -> "DetectionChain":
        return cls(1.0, 1.0, 0.0)

    @property
    def efficiency(self) -> float:
        """ η = quantum efficiency · visibility² · (1 - extra electronic loss). """
        return self.quantum_efficiency * self.visibility ** 2 * (1.0 - self.extra_electronic_loss)
