from dataclasses import dataclass

from OPONoise.errors import ValidationError


@dataclass(frozen=True)
class NoisePoint:
    """ Noise record at one analysis frequency, in shot-noise units.

    `g_x` is the variance of X- and `g_y` the variance of Y+; `v_ind_x` and `v_ind_y`
    are the amplitude and phase variances of either beam alone. The `err_*` fields
    hold 1-σ uncertainties (0 when unknown).
    """
    freq_hz: float
    omega: float
    g_x: float
    g_y: float
    v_ind_x: float
    v_ind_y: float
    err_g_x: float = 0.0
    err_g_y: float = 0.0
    err_v_ind_x: float = 0.0
    err_v_ind_y: float = 0.0

    def __post_init__(self):
        for name in ("g_x", "g_y", "v_ind_x", "v_ind_y"):
            if not getattr(self, name) > 0.0:
                raise ValidationError(f"{name} must be positive, got {getattr(self, name)}.", name)
        for name in ("err_g_x", "err_g_y", "err_v_ind_x", "err_v_ind_y"):
            if not getattr(self, name) >= 0.0:
                raise ValidationError(f"{name} must be non-negative, got {getattr(self, name)}.", name)
        if not self.freq_hz >= 0.0:
            raise ValidationError(f"freq_hz must be non-negative, got {self.freq_hz}.", "freq_hz")

    @classmethod
    def vacuum(cls, freq_hz: float = 0.0, omega: float = 0.0) -> "NoisePoint":
        return cls(freq_hz, omega, 1.0, 1.0, 1.0, 1.0)
