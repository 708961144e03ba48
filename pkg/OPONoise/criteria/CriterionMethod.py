from abc import ABC, abstractmethod
from typing import Optional

from OPONoise.errors import DomainError

from .Estimate import Estimate


class CriterionMethod(ABC):
    """ A two-mode correlation criterion, satisfied when its value is below 1. """
    name: str = ""
    expression_id: str = ""

    @abstractmethod
    def compute(self, g_x: Estimate, g_y: Estimate,
                v_x: Optional[Estimate] = None, v_y: Optional[Estimate] = None) -> Estimate:
        """Abstract method for criterion evaluation

        Args:
            g_x (Estimate): Variance of X-.
            g_y (Estimate): Variance of Y+.
            v_x (Optional[Estimate]): Amplitude variance of either beam.
            v_y (Optional[Estimate]): Phase variance of either beam.

        Returns:
            Estimate: Criterion value with first-order propagated error.
        """
        ...

    def _check_args(self, *estimates: Optional[Estimate]):
        """Checks that all given variances are defined and positive.

        Args:
            estimates (Estimate): Inputs of the criterion.
        """
        for estimate in estimates:
            if estimate is None:
                raise DomainError(f"{self.name} criterion is missing an input variance.")
            if not estimate.value > 0.0:
                raise DomainError(f"{self.name} criterion needs positive variances, got {estimate.value}.")

    def __eq__(self, o: object) -> bool:
        return type(o) == type(self)
