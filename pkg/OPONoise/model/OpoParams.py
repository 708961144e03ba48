import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from OPONoise.errors import ValidationError

logger = logging.getLogger(__name__)

# Pump-noise coupling of G_Y is only established close to threshold.
SIGMA_VALIDITY_MARGIN = 0.2


@lru_cache(maxsize=None)
def _warn_far_above_threshold(sigma_pump: float) -> None:
    logger.warning("Pumping parameter sigma=%g is far from threshold (|sigma - 1| > %g); "
                   "the pump phase-noise coupling of G_Y may not hold.", sigma_pump, SIGMA_VALIDITY_MARGIN)


@dataclass(frozen=True)
class OpoParams:
    """ Physical parameters of the OPO above threshold.

    Args:
        t_out (float): Output-coupler transmission T.
        mu_loss (float): Intracavity extra losses μ.
        sigma_pump (float): Pump amplitude normalized to the threshold amplitude.
        cavity_fwhm_hz (float): Linewidth of the infrared cavity in Hz.
        mu_loss_err (float): 1-σ uncertainty of `mu_loss`, propagated into sweeps.
    """
    t_out: float
    mu_loss: float
    sigma_pump: float
    cavity_fwhm_hz: float
    mu_loss_err: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.t_out <= 1.0:
            raise ValidationError(f"t_out must satisfy 0 < t_out <= 1, got {self.t_out}.", "t_out")
        if not self.mu_loss >= 0.0:
            raise ValidationError(f"mu_loss must be >= 0, got {self.mu_loss}.", "mu_loss")
        if not self.sigma_pump >= 1.0:
            raise ValidationError(
                f"sigma_pump must be >= 1 (above threshold), got {self.sigma_pump}.", "sigma_pump")
        if not self.cavity_fwhm_hz > 0.0:
            raise ValidationError(f"cavity_fwhm_hz must be > 0, got {self.cavity_fwhm_hz}.", "cavity_fwhm_hz")
        if not self.mu_loss_err >= 0.0:
            raise ValidationError(f"mu_loss_err must be >= 0, got {self.mu_loss_err}.", "mu_loss_err")
        if abs(self.sigma_pump - 1.0) > SIGMA_VALIDITY_MARGIN:
            _warn_far_above_threshold(self.sigma_pump)

    @classmethod
    def from_power_ratio(cls, power_ratio: float, **kwargs) -> "OpoParams":
        """Create parameters from the pump power relative to threshold.

        Args:
            power_ratio (float): P_pump / P_threshold; σ is its square root.

        Returns:
            OpoParams: Parameters with `sigma_pump = sqrt(power_ratio)`.
        """
        if not power_ratio >= 1.0:
            raise ValidationError(f"pump_power_ratio must be >= 1, got {power_ratio}.", "pump_power_ratio")
        return cls(sigma_pump=math.sqrt(power_ratio), **kwargs)

    @property
    def escape_efficiency(self) -> float:
        """ T / (T + μ). """
        return self.t_out / (self.t_out + self.mu_loss)
