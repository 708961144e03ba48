from enum import Enum


class ModeBasis(Enum):
    """ Basis in which the quadratures of a two-mode state are expressed.

    `SignalIdler` orders the quadratures as (X1, Y1, X2, Y2), `RotatedPlusMinus`
    as (X+, Y+, X-, Y-) with A± = (A1 ± A2)/√2.
    """
    SignalIdler = "signal_idler"
    RotatedPlusMinus = "rotated_plus_minus"

    @property
    def mode_labels(self):
        """ Mode labels in the order they occupy the quadrature vector. """
        if self is ModeBasis.SignalIdler:
            return ("1", "2")
        return ("+", "-")
