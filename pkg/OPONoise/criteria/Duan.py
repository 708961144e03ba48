import math
from typing import Optional

from .CriterionMethod import CriterionMethod
from .Estimate import Estimate


class Duan(CriterionMethod):
    """ Sum criterion (G_X + G_Y)/2 < 1, also called separability. """
    name = "duan"
    expression_id = "(GX+GY)/2<1"

    def compute(self, g_x: Estimate, g_y: Estimate,
                v_x: Optional[Estimate] = None, v_y: Optional[Estimate] = None) -> Estimate:
        self._check_args(g_x, g_y)
        value = (g_x.value + g_y.value) / 2.0
        err = math.hypot(g_x.err, g_y.err) / 2.0
        return Estimate(value, err)
