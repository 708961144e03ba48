from dataclasses import dataclass

from OPONoise.errors import ValidationError

from .FrequencyTable import FrequencyTable


@dataclass(frozen=True)
class PumpNoiseModel:
    """ Pump phase noise V₀ before the filtering cavity and the cavity itself.

    Args:
        v0_raw (FrequencyTable): Pump phase noise in shot-noise units versus frequency.
        filter_fwhm_hz (float): Linewidth of the filtering cavity in Hz.
        filter_enabled (bool): Whether the pump passes through the filtering cavity.
        v0_raw_err (float): 1-σ uncertainty of the raw noise level, propagated into sweeps.
    """
    v0_raw: FrequencyTable
    filter_fwhm_hz: float
    filter_enabled: bool = True
    v0_raw_err: float = 0.0

    def __post_init__(self):
        if not self.v0_raw.values.min() >= 1.0:
            raise ValidationError("v0_raw must be >= 1 (shot noise) at every frequency.", "v0_raw")
        if not self.filter_fwhm_hz > 0.0:
            raise ValidationError(f"filter_fwhm_hz must be > 0, got {self.filter_fwhm_hz}.", "filter_fwhm_hz")
        if not self.v0_raw_err >= 0.0:
            raise ValidationError(f"v0_raw_err must be >= 0, got {self.v0_raw_err}.", "v0_raw_err")

    @classmethod
    def constant(cls, level: float, filter_fwhm_hz: float, filter_enabled: bool = True) -> "PumpNoiseModel":
        return cls(FrequencyTable.constant(level), filter_fwhm_hz, filter_enabled)
