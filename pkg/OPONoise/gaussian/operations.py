import math
from dataclasses import dataclass

import numpy

from OPONoise.errors import DomainError, PhysicalityError, ValidationError

from .ModeBasis import ModeBasis
from .QuadratureSelector import QuadratureSelector
from .TwoModeCovariance import TwoModeCovariance


PHYSICALITY_TOLERANCE = 1e-9

# 50/50 beam splitter in quadrature space: (X1, Y1, X2, Y2) -> (X+, Y+, X-, Y-).
# Symmetric and its own inverse.
BEAM_SPLITTER = numpy.array([
    [1.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 0.0, 1.0],
    [1.0, 0.0, -1.0, 0.0],
    [0.0, 1.0, 0.0, -1.0],
]) / math.sqrt(2.0)

SYMPLECTIC_FORM = numpy.array([
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
])


@dataclass(frozen=True)
class PhysicalityReport:
    physical: bool
    min_symplectic_eigenvalue: float


def rotate_basis(cov: TwoModeCovariance, from_basis: ModeBasis, to_basis: ModeBasis) -> TwoModeCovariance:
    """Express a covariance matrix in another mode basis.

    Args:
        cov (TwoModeCovariance): State to transform, expressed in `from_basis`.
        from_basis (ModeBasis): Basis `cov` is expressed in.
        to_basis (ModeBasis): Target basis.

    Returns:
        TwoModeCovariance: S Σ Sᵀ with S the beam-splitter transform, or `cov` itself
        when both bases are equal.
    """
    if cov.basis is not from_basis:
        raise ValidationError(
            f"Covariance is expressed in {cov.basis.name}, not in {from_basis.name}.", "basis")
    if from_basis is to_basis:
        return cov
    rotated = BEAM_SPLITTER @ cov.entries @ BEAM_SPLITTER.T
    return TwoModeCovariance(0.5 * (rotated + rotated.T), to_basis)


def build_covariance(g_x: float, g_y: float, v_ind_x: float, v_ind_y: float,
                     validate: bool = True) -> TwoModeCovariance:
    """Build the symmetric signal/idler state with Var(X-) = g_x and Var(Y+) = g_y.

    Both beams share the individual variances `v_ind_x` and `v_ind_y`; all X-Y cross
    terms are zero.

    Args:
        g_x (float): Variance of (X1 - X2)/√2.
        g_y (float): Variance of (Y1 + Y2)/√2.
        v_ind_x (float): Variance of X1 and X2.
        v_ind_y (float): Variance of Y1 and Y2.
        validate (bool): Raise `PhysicalityError` when the state violates the uncertainty
            relation. Measured values rounded to the published precision may do so.

    Returns:
        TwoModeCovariance: State in the signal/idler basis.
    """
    for name, value in (("g_x", g_x), ("g_y", g_y), ("v_ind_x", v_ind_x), ("v_ind_y", v_ind_y)):
        if not value > 0:
            raise ValidationError(f"{name} must be positive, got {value}.", name)

    cov_x = v_ind_x - g_x
    cov_y = g_y - v_ind_y
    entries = numpy.array([
        [v_ind_x, 0.0, cov_x, 0.0],
        [0.0, v_ind_y, 0.0, cov_y],
        [cov_x, 0.0, v_ind_x, 0.0],
        [0.0, cov_y, 0.0, v_ind_y],
    ])
    cov = TwoModeCovariance(entries, ModeBasis.SignalIdler)

    if validate:
        report = check_physical(cov)
        if not report.physical:
            raise PhysicalityError(
                f"State (g_x={g_x}, g_y={g_y}, v_ind_x={v_ind_x}, v_ind_y={v_ind_y}) is unphysical: "
                f"minimum symplectic eigenvalue {report.min_symplectic_eigenvalue:.6g} < 1.",
                report.min_symplectic_eigenvalue)
    return cov


def minimum_individual_variance(g_x: float, g_y: float) -> float:
    """Smallest common individual variance for which `build_covariance(g_x, g_y, v, v)` is physical.

    The rotated modes are uncorrelated, with Var(X-)Var(Y-) = g_x (2v - g_y) and
    Var(X+)Var(Y+) = (2v - g_x) g_y; both products must reach 1.
    """
    return max((1.0 / g_x + g_y) / 2.0, (1.0 / g_y + g_x) / 2.0)


def _weights(sel: QuadratureSelector, basis: ModeBasis) -> numpy.ndarray:
    """ Coefficients of the selected observable on the quadrature vector of `basis`. """
    weights = numpy.zeros(4)
    start = 2 * sel.mode_index
    weights[start] = math.cos(sel.angle)
    weights[start + 1] = math.sin(sel.angle)
    if sel.basis is not basis:
        weights = BEAM_SPLITTER.T @ weights
    return weights


def generalized_variance(cov: TwoModeCovariance, sel: QuadratureSelector) -> float:
    """Variance of X_m cosθ + Y_m sinθ.

    Args:
        cov (TwoModeCovariance): State.
        sel (QuadratureSelector): Selected mode, quadrature and phase. The mode may
            belong to either basis.

    Returns:
        float: Variance in shot-noise units.
    """
    weights = _weights(sel, cov.basis)
    return float(weights @ cov.entries @ weights)


def conditional_variance(cov: TwoModeCovariance, target: QuadratureSelector,
                         conditioner: QuadratureSelector) -> float:
    """Residual variance of `target` after optimal linear inference from `conditioner`.

    Args:
        cov (TwoModeCovariance): State.
        target (QuadratureSelector): Inferred observable A.
        conditioner (QuadratureSelector): Measured observable B.

    Returns:
        float: Var(A) - Cov(A,B)²/Var(B).
    """
    w_target = _weights(target, cov.basis)
    w_conditioner = _weights(conditioner, cov.basis)
    var_conditioner = float(w_conditioner @ cov.entries @ w_conditioner)
    if var_conditioner <= 0.0:
        raise DomainError("Conditional variance is undefined for a conditioner with zero variance.")
    var_target = float(w_target @ cov.entries @ w_target)
    covariance = float(w_target @ cov.entries @ w_conditioner)
    return var_target - covariance ** 2 / var_conditioner


def symplectic_eigenvalues(cov: TwoModeCovariance) -> numpy.ndarray:
    """ Symplectic eigenvalues in ascending order, taken from the moduli of the eigenvalues of iJΣ. """
    moduli = numpy.sort(numpy.abs(numpy.linalg.eigvals(1j * SYMPLECTIC_FORM @ cov.entries)))
    return moduli[::2]


def check_physical(cov: TwoModeCovariance) -> PhysicalityReport:
    """Check the uncertainty relation Σ + iJ ⪰ 0.

    Args:
        cov (TwoModeCovariance): State to check.

    Returns:
        PhysicalityReport: Verdict and the smallest symplectic eigenvalue.
    """
    smallest = float(symplectic_eigenvalues(cov)[0])
    return PhysicalityReport(smallest >= 1.0 - PHYSICALITY_TOLERANCE, smallest)
