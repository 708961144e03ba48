from typing import Iterable, Optional

import numpy

from OPONoise.errors import ValidationError
from OPONoise.utils import is_sorted


class FrequencyTable:
    """ Piecewise-linear table of a positive quantity versus analysis frequency.

    Values are linear (shot-noise units). Outside the tabulated range the first or
    last value is held; a single entry is a constant.
    """

    def __init__(self, freqs_hz: Iterable[float], values: Iterable[float], errors: Optional[Iterable[float]] = None):
        self._freqs = numpy.array(freqs_hz, dtype=float)
        self._values = numpy.array(values, dtype=float)
        self._errors = numpy.zeros_like(self._values) if errors is None else numpy.array(errors, dtype=float)
        self._validate_input()

    def _validate_input(self):
        if self._freqs.ndim != 1 or len(self._freqs) == 0:
            raise ValidationError("Frequency table needs at least one entry.", "freq")
        if len(self._freqs) != len(self._values) or len(self._values) != len(self._errors):
            raise ValidationError("Frequencies, values and errors are of different length.", "value")
        if not is_sorted(self._freqs):
            raise ValidationError("Frequency table entries have to be sorted by frequency.", "freq")
        if not numpy.all(self._values > 0):
            raise ValidationError("Frequency table values must be positive.", "value")
        if not numpy.all(self._errors >= 0):
            raise ValidationError("Frequency table errors must be non-negative.", "err")

    @classmethod
    def constant(cls, value: float, error: float = 0.0) -> "FrequencyTable":
        return cls([0.0], [value], [error])

    @classmethod
    def from_db(cls, freqs_hz: Iterable[float], db: Iterable[float],
                err_db: Optional[Iterable[float]] = None) -> "FrequencyTable":
        """Create a table from decibel entries.

        Args:
            freqs_hz (Iterable[float]): Frequencies in Hz.
            db (Iterable[float]): Values in dB relative to shot noise.
            err_db (Optional[Iterable[float]]): 1-σ errors in dB.

        Returns:
            FrequencyTable: Table in linear units with first-order converted errors.
        """
        values = 10.0 ** (numpy.array(db, dtype=float) / 10.0)
        errors = None
        if err_db is not None:
            errors = numpy.log(10.0) / 10.0 * values * numpy.array(err_db, dtype=float)
        return cls(freqs_hz, values, errors)

    @property
    def values(self) -> numpy.ndarray:
        return self._values.copy()

    @property
    def is_constant(self) -> bool:
        return bool(numpy.all(self._values == self._values[0]))

    def __call__(self, freq_hz: float) -> float:
        return float(numpy.interp(freq_hz, self._freqs, self._values))

    def error_at(self, freq_hz: float) -> float:
        return float(numpy.interp(freq_hz, self._freqs, self._errors))

    def __eq__(self, o: object) -> bool:
        if not isinstance(o, FrequencyTable):
            return False
        return (numpy.array_equal(self._freqs, o._freqs)
                and numpy.array_equal(self._values, o._values)
                and numpy.array_equal(self._errors, o._errors))

    def __repr__(self) -> str:
        return f"FrequencyTable(freqs_hz={self._freqs.tolist()}, values={self._values.tolist()})"
