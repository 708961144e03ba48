import math
from dataclasses import dataclass
from typing import Optional

from OPONoise.errors import DomainError, ValidationError

from .Estimate import Estimate

DB_PER_NEPER = 10.0 / math.log(10.0)


@dataclass(frozen=True)
class DbValue:
    """ Noise level in dB relative to shot noise, with an optional 1-σ error in dB. """
    db: float
    err_db: Optional[float] = None

    def __post_init__(self):
        if not math.isfinite(self.db):
            raise ValidationError(f"dB value must be finite, got {self.db}.", "db")
        if self.err_db is not None and not (math.isfinite(self.err_db) and self.err_db >= 0.0):
            raise ValidationError(f"dB error must be finite and >= 0, got {self.err_db}.", "err_db")

    def to_linear(self) -> Estimate:
        return db_to_linear(self)


def db_to_linear(v: DbValue) -> Estimate:
    """Convert a dB level to shot-noise units.

    Args:
        v (DbValue): Level in dB, error optional.

    Returns:
        Estimate: 10^(db/10) with error ln(10)/10 · value · err_db (0 without error).
    """
    value = 10.0 ** (v.db / 10.0)
    err = value * (v.err_db or 0.0) / DB_PER_NEPER
    return Estimate(value, err)


def linear_to_db(v: Estimate) -> DbValue:
    """ Inverse of `db_to_linear`. """
    if not v.value > 0.0:
        raise DomainError(f"Only positive values have a dB level, got {v.value}.")
    return DbValue(10.0 * math.log10(v.value), DB_PER_NEPER * v.err / v.value)
