import logging

from .ModeBasis import ModeBasis
from .QuadratureSelector import Quadrature, QuadratureSelector
from .TwoModeCovariance import TwoModeCovariance
from .operations import (PhysicalityReport, build_covariance, check_physical, conditional_variance,
                         generalized_variance, minimum_individual_variance, rotate_basis,
                         symplectic_eigenvalues)

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "ModeBasis",
    "Quadrature",
    "QuadratureSelector",
    "TwoModeCovariance",
    "PhysicalityReport",
    "build_covariance",
    "check_physical",
    "conditional_variance",
    "generalized_variance",
    "minimum_individual_variance",
    "rotate_basis",
    "symplectic_eigenvalues",
]
