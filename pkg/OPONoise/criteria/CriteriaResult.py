from dataclasses import dataclass
from typing import Optional

from .Estimate import Estimate


@dataclass(frozen=True)
class CriteriaResult:
    """ The three criteria at one analysis frequency.

    `epr` is None when a factor of the closed form is non-positive. `epr_covariance`
    holds the value obtained from the conditional variances of the rebuilt state and
    is only set when that state is physical.
    """
    mancini: Estimate
    duan: Estimate
    epr: Optional[Estimate]
    state_physical: bool = True
    epr_covariance: Optional[float] = None

    @property
    def epr_evaluable(self) -> bool:
        return self.epr is not None

    @property
    def verdict_inseparable_mancini(self) -> bool:
        return self.mancini.value < 1.0

    @property
    def verdict_inseparable_duan(self) -> bool:
        return self.duan.value < 1.0

    @property
    def verdict_epr(self) -> bool:
        return self.epr is not None and self.epr.value < 1.0
