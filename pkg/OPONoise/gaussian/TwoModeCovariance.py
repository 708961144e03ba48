from typing import Iterable

import numpy

from OPONoise.errors import ValidationError

from .ModeBasis import ModeBasis

SYMMETRY_TOLERANCE = 1e-12


class TwoModeCovariance:
    """ Covariance matrix of a two-mode Gaussian state.

    Entries are dimensionless with the vacuum variance normalized to 1 and are ordered
    (X1, Y1, X2, Y2) in the signal/idler basis or (X+, Y+, X-, Y-) in the rotated basis.
    Instances are immutable.
    """

    def __init__(self, entries: Iterable[Iterable[float]], basis: ModeBasis = ModeBasis.SignalIdler):
        matrix = numpy.array(entries, dtype=float)
        self._validate_input(matrix)
        matrix.setflags(write=False)
        self._entries = matrix
        self._basis = basis

    def _validate_input(self, matrix: numpy.ndarray):
        if matrix.shape != (4, 4):
            raise ValidationError(f"Covariance matrix must be 4x4, got shape {matrix.shape}.", "entries")
        if not numpy.all(numpy.isfinite(matrix)):
            raise ValidationError("Covariance matrix contains non-finite entries.", "entries")
        if not numpy.allclose(matrix, matrix.T, rtol=0.0, atol=SYMMETRY_TOLERANCE):
            raise ValidationError("Covariance matrix is not symmetric.", "entries")
        if numpy.linalg.eigvalsh(matrix).min() <= 0.0:
            raise ValidationError("Covariance matrix is not positive definite.", "entries")

    @classmethod
    def vacuum(cls, basis: ModeBasis = ModeBasis.SignalIdler) -> "TwoModeCovariance":
        return cls(numpy.identity(4), basis)

    @property
    def entries(self) -> numpy.ndarray:
        """ Read-only view of the 4x4 matrix. """
        return self._entries

    @property
    def basis(self) -> ModeBasis:
        return self._basis

    def block(self, mode_index: int) -> numpy.ndarray:
        """Get the 2x2 covariance block of one mode.

        Args:
            mode_index (int): 0 for the first mode of the basis, 1 for the second.

        Returns:
            numpy.ndarray: Block [[Var(X), Cov(X,Y)], [Cov(X,Y), Var(Y)]].
        """
        start = 2 * mode_index
        return self._entries[start:start + 2, start:start + 2]

    def scaled(self, factor: float) -> "TwoModeCovariance":
        return TwoModeCovariance(self._entries * factor, self._basis)

    def __eq__(self, o: object) -> bool:
        """Comparison operator `==`.

        Args:
            o (object): Object to compare with.

        Returns:
            bool: State of equality.
        """
        if not isinstance(o, TwoModeCovariance):
            return False
        return self._basis == o._basis and numpy.array_equal(self._entries, o._entries)

    def __repr__(self) -> str:
        return f"TwoModeCovariance(basis={self._basis.name}, entries={self._entries.tolist()})"
