from .data import default_config
from .data import measured_20mhz
from .data import measured_6mhz
from .data import vacuum_point

__all__ = [
    "default_config",
    "measured_20mhz",
    "measured_6mhz",
    "vacuum_point",
]
