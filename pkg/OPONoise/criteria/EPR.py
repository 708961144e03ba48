import math
from typing import Optional, Tuple

from OPONoise.errors import DomainError

from .CriterionMethod import CriterionMethod
from .Estimate import Estimate


class EPR(CriterionMethod):
    """ Reid criterion written with the variances of the rotated modes and of the single beams:

    (2 G_Y - G_Y²/V_Y) (2 G_X - G_X²/V_X) < 1.
    """
    name = "epr"
    expression_id = "(2GY-GY^2/VY)(2GX-GX^2/VX)<1"

    def compute(self, g_x: Estimate, g_y: Estimate,
                v_x: Optional[Estimate] = None, v_y: Optional[Estimate] = None) -> Estimate:
        """Compute the product of the two conditional-variance factors.

        Each factor 2G - G²/V is the conditional variance of one quadrature of a beam
        given the same quadrature of the other one. It turns negative for V < G/2, where
        no state reproduces the inputs, and is refused there.

        Args:
            g_x (Estimate): Variance of X-.
            g_y (Estimate): Variance of Y+.
            v_x (Estimate): Amplitude variance of either beam.
            v_y (Estimate): Phase variance of either beam.

        Returns:
            Estimate: Criterion value with error propagated over all four inputs.
        """
        self._check_args(g_x, g_y, v_x, v_y)
        factor_x, d_factor_x = _factor("X", g_x.value, v_x.value)
        factor_y, d_factor_y = _factor("Y", g_y.value, v_y.value)

        value = factor_x * factor_y
        err = math.sqrt(
            (factor_y * d_factor_x[0] * g_x.err) ** 2
            + (factor_y * d_factor_x[1] * v_x.err) ** 2
            + (factor_x * d_factor_y[0] * g_y.err) ** 2
            + (factor_x * d_factor_y[1] * v_y.err) ** 2)
        return Estimate(value, err)


def _factor(quadrature: str, g: float, v: float) -> Tuple[float, Tuple[float, float]]:
    """ Factor 2g - g²/v and its partial derivatives with respect to g and v. """
    factor = 2.0 * g - g ** 2 / v
    if factor <= 0.0:
        raise DomainError(
            f"EPR factor for the {quadrature} quadrature is {factor:.6g} <= 0 "
            f"(G_{quadrature}={g}, V_{quadrature}={v}).")
    return factor, (2.0 - 2.0 * g / v, (g / v) ** 2)
