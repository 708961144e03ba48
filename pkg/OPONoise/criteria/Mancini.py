import math
from typing import Optional

from .CriterionMethod import CriterionMethod
from .Estimate import Estimate


class Mancini(CriterionMethod):
    """ Product criterion G_X · G_Y < 1. """
    name = "mancini"
    expression_id = "GX*GY<1"

    def compute(self, g_x: Estimate, g_y: Estimate,
                v_x: Optional[Estimate] = None, v_y: Optional[Estimate] = None) -> Estimate:
        self._check_args(g_x, g_y)
        value = g_x.value * g_y.value
        err = math.hypot(g_y.value * g_x.err, g_x.value * g_y.err)
        return Estimate(value, err)
