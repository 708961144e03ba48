import logging

from .CriteriaResult import CriteriaResult
from .CriterionMethod import CriterionMethod
from .DbValue import DbValue, db_to_linear, linear_to_db
from .Duan import Duan
from .EPR import EPR
from .Estimate import Estimate
from .Mancini import Mancini
from .evaluate import (duan, epr_closed_form, epr_from_covariance, error_agrees, evaluate_all, mancini)

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "CriteriaResult",
    "CriterionMethod",
    "DbValue",
    "Duan",
    "EPR",
    "Estimate",
    "Mancini",
    "db_to_linear",
    "duan",
    "epr_closed_form",
    "epr_from_covariance",
    "error_agrees",
    "evaluate_all",
    "linear_to_db",
    "mancini",
]
