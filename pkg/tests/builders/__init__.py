import logging

from .FitProblemBuilder import FitProblemBuilder
from .NoisePointBuilder import NoisePointBuilder
from .OpoParamsBuilder import OpoParamsBuilder

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "FitProblemBuilder",
    "NoisePointBuilder",
    "OpoParamsBuilder",
]
