import logging

from .DetectionChain import DetectionChain
from .FrequencyTable import FrequencyTable
from .NoisePoint import NoisePoint
from .OpoParams import OpoParams
from .PumpNoiseModel import PumpNoiseModel
from .spectra import (apply_detection, build_state_at, filter_transmission, filtered_pump_noise, g_x_spectrum,
                      g_y_spectrum, noise_point, normalized_frequency, spectrum_sweep)

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "DetectionChain",
    "FrequencyTable",
    "NoisePoint",
    "OpoParams",
    "PumpNoiseModel",
    "apply_detection",
    "build_state_at",
    "filter_transmission",
    "filtered_pump_noise",
    "g_x_spectrum",
    "g_y_spectrum",
    "noise_point",
    "normalized_frequency",
    "spectrum_sweep",
]
