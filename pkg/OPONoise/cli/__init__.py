import logging

from .HomodyneTrace import HomodyneTrace
from .LoadConfigAction import LoadConfigAction
from .RunConfig import FitSettings, RunConfig, SpectraSettings, TraceSettings, load_config, load_default_config
from .SelectModeAction import SelectModeAction
from .scenarios import (FIG2_FREQ_HZ, FIG3_FREQ_HZ, TARGETS, homodyne_trace, locked_quadratures, measured_point,
                        run_criteria, run_fit, run_reproduce, run_spectra, run_trace, table1)
from .writers import write_artifacts, write_frame, write_metadata

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "FIG2_FREQ_HZ",
    "FIG3_FREQ_HZ",
    "FitSettings",
    "HomodyneTrace",
    "LoadConfigAction",
    "RunConfig",
    "SelectModeAction",
    "SpectraSettings",
    "TARGETS",
    "TraceSettings",
    "homodyne_trace",
    "load_config",
    "load_default_config",
    "locked_quadratures",
    "measured_point",
    "run_criteria",
    "run_fit",
    "run_reproduce",
    "run_spectra",
    "run_trace",
    "table1",
    "write_artifacts",
    "write_frame",
    "write_metadata",
]
