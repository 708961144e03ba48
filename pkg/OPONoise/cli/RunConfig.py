import copy
import logging
import os
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Dict, List, Optional, Tuple

import yaml

from OPONoise.criteria import DbValue, Estimate, db_to_linear
from OPONoise.errors import ConfigError, ValidationError
from OPONoise.fit import FREE_PARAMETERS, FitProblem, ObservationTable
from OPONoise.model import DetectionChain, FrequencyTable, NoisePoint, OpoParams, PumpNoiseModel, noise_point
from OPONoise.utils import parse_frequency

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_NAME = "default_config.yaml"

_TABLE_ENTRY_KEYS = {"freq", "value", "db", "err", "err_db"}
_ALLOWED_KEYS = {
    "": {"opo", "pump", "detection", "individual_noise", "spectra", "criteria", "trace", "measurements",
         "reported_criteria", "fit"},
    "opo": {"t_out", "mu_loss", "mu_loss_err", "sigma_pump", "pump_power_ratio", "cavity_fwhm"},
    "pump": {"v0_raw", "v0_raw_err", "filter_fwhm", "filter_enabled"},
    "detection": {"quantum_efficiency", "visibility", "extra_electronic_loss"},
    "spectra": {"min", "max", "points"},
    "criteria": {"freq", "source"},
    "trace": {"freq", "mode", "phase_points", "rbw", "vbw"},
    "reported_criteria": {"mancini", "duan", "epr"},
    "reported_criteria.*": {"value", "err"},
    "fit": {"free_params", "observations", "bounds", "grid_points", "max_iterations", "tolerance"},
    "fit.bounds": set(FREE_PARAMETERS),
}
SOURCES = ("measured", "model")
MODES = ("plus", "minus")


@dataclass(frozen=True)
class SpectraSettings:
    min_hz: float
    max_hz: float
    points: int


@dataclass(frozen=True)
class TraceSettings:
    freq_hz: float
    mode: str
    phase_points: int
    rbw_hz: float
    vbw_hz: float


@dataclass(frozen=True)
class FitSettings:
    free_params: Tuple[str, ...]
    observations: Tuple[str, ...]
    bounds: Dict[str, Tuple[float, float]]
    grid_points: int
    max_iterations: int
    tolerance: float


@dataclass(frozen=True)
class RunConfig:
    """ Validated run configuration: the apparatus plus the settings of every scenario. """
    opo: OpoParams
    pump: PumpNoiseModel
    detection: DetectionChain
    v_ind_table: FrequencyTable
    spectra: SpectraSettings
    criteria_freq_hz: float
    criteria_source: str
    trace: TraceSettings
    measurements: ObservationTable
    reported_criteria: Dict[str, Estimate]
    fit: FitSettings
    path: Optional[str] = field(default=None, compare=False)

    def model_point(self, freq_hz: float) -> NoisePoint:
        """ Detected noise record predicted by the configured model. """
        return noise_point(freq_hz, self.opo, self.pump, self.detection, self.v_ind_table)

    def fit_problem(self, free_params: Optional[List[str]] = None,
                    observations: Optional[ObservationTable] = None) -> FitProblem:
        """Build the fit problem described by the `fit` section.

        Args:
            free_params (Optional[List[str]]): Overrides `fit.free_params`.
            observations (Optional[ObservationTable]): Uses every observation of this
                table instead of the labelled subset of `measurements`.

        Returns:
            FitProblem: Problem with the configured model as fixed part.
        """
        names = tuple(free_params) if free_params else self.fit.free_params
        if observations is None:
            selected = self.measurements.select(self.fit.observations)
        else:
            selected = observations.observations
        bounds = {name: self.fit.bounds[name] for name in names if name in self.fit.bounds}
        return FitProblem(tuple(selected), names, self.opo, self.pump, self.detection, self.v_ind_table,
                          bounds, self.fit.grid_points, self.fit.max_iterations, self.fit.tolerance)


def default_config_path() -> str:
    return str(resources.files("OPONoise.resources").joinpath(DEFAULT_CONFIG_NAME))


def load_default_config() -> RunConfig:
    return load_config(default_config_path())


def load_config(path: str) -> RunConfig:
    """Parse and validate a YAML run configuration.

    Omitted fields take the values of the shipped default configuration.

    Args:
        path (str): Path to the YAML file.

    Returns:
        RunConfig: Validated configuration.
    """
    document = _drop_empty(_read_yaml(path))
    _check_keys(document, "")
    defaults = _read_yaml(default_config_path())
    if "measurements" not in document:
        document["measurements"] = os.path.join(os.path.dirname(default_config_path()), defaults["measurements"])
    opo = _section(document, "opo")
    if "sigma_pump" in opo and "pump_power_ratio" in opo:
        raise ConfigError("Give either 'opo.sigma_pump' or 'opo.pump_power_ratio', not both.", "opo.sigma_pump")
    if "sigma_pump" in opo:
        defaults["opo"].pop("pump_power_ratio")
    merged = _merge(defaults, document)
    config = _build(merged, os.path.dirname(os.path.abspath(path)), path)
    logger.debug("Loaded config %s with sigma=%.6g and eta=%.6g.", path, config.opo.sigma_pump,
                 config.detection.efficiency)
    return config


def _read_yaml(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as stream:
            document = yaml.safe_load(stream)
    except OSError as error:
        raise ConfigError(f"Cannot read config file {path}: {error.strerror}.") from error
    except yaml.MarkedYAMLError as error:
        line = error.problem_mark.line + 1 if error.problem_mark is not None else None
        raise ConfigError(f"{path}, line {line}: {error.problem}", line=line) from error
    except yaml.YAMLError as error:
        raise ConfigError(f"{path}: {error}") from error
    if document is None:
        return {}
    if not isinstance(document, dict):
        raise ConfigError(f"{path}: top level must be a mapping.")
    return document


def _check_keys(section: Any, prefix: str):
    """ Raise on keys that are not part of the documented key tree. """
    if not isinstance(section, dict):
        return
    allowed = _ALLOWED_KEYS.get(prefix)
    if allowed is None and "." in prefix:
        allowed = _ALLOWED_KEYS.get(prefix.rsplit(".", 1)[0] + ".*")
    if allowed is None:
        return
    for key, value in section.items():
        dotted = f"{prefix}.{key}" if prefix else str(key)
        if key not in allowed:
            raise ConfigError(f"Unknown config key '{dotted}'.", dotted)
        if isinstance(value, list):
            for entry in value:
                if isinstance(entry, dict):
                    unknown = set(entry) - _TABLE_ENTRY_KEYS
                    if unknown:
                        raise ConfigError(f"Unknown config key '{dotted}.{sorted(unknown)[0]}'.", dotted)
        else:
            _check_keys(value, dotted)


def _drop_empty(section: Dict[str, Any]) -> Dict[str, Any]:
    """ Remove keys written without a value, at any depth, so that they take the defaults. """
    return {key: _drop_empty(value) if isinstance(value, dict) else value
            for key, value in section.items() if value is not None}


def _merge(defaults: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(defaults)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _number(value: Any, name: str) -> float:
    if isinstance(value, bool):
        raise ConfigError(f"'{name}' must be a number, got {value!r}.", name)
    try:
        return float(value)
    except (TypeError, ValueError) as error:
        raise ConfigError(f"'{name}' must be a number, got {value!r}.", name) from error


def _integer(value: Any, name: str) -> int:
    number = _number(value, name)
    if number != int(number):
        raise ConfigError(f"'{name}' must be an integer, got {value!r}.", name)
    return int(number)


def _frequency(value: Any, name: str) -> float:
    try:
        return parse_frequency(value, name)
    except ValidationError as error:
        raise ConfigError(str(error), name) from error


def _table(value: Any, name: str) -> FrequencyTable:
    """ Frequency table from a constant or a list of {freq, value|db, err|err_db} entries. """
    if not isinstance(value, list):
        return FrequencyTable.constant(_number(value, name))
    freqs, values, errors = [], [], []
    for index, entry in enumerate(value):
        entry_name = f"{name}[{index}]"
        if not isinstance(entry, dict) or "freq" not in entry or ("value" in entry) == ("db" in entry):
            raise ConfigError(f"'{entry_name}' needs 'freq' and exactly one of 'value' or 'db'.", entry_name)
        freqs.append(_frequency(entry["freq"], f"{entry_name}.freq"))
        if "db" in entry:
            linear = db_to_linear(DbValue(_number(entry["db"], f"{entry_name}.db"),
                                          _number(entry.get("err_db", 0.0), f"{entry_name}.err_db")))
            level, err = linear.value, linear.err
        else:
            level = _number(entry["value"], f"{entry_name}.value")
            err = _number(entry.get("err", 0.0), f"{entry_name}.err")
        values.append(level)
        errors.append(err)
    try:
        return FrequencyTable(freqs, values, errors)
    except ValidationError as error:
        raise ConfigError(f"Invalid table '{name}': {error}", name) from error


class _Section(dict):
    """ Mapping whose missing keys raise a ConfigError naming the dotted key. """

    def __init__(self, prefix: str, values: Dict[str, Any]):
        super().__init__(values)
        self.prefix = prefix

    def __missing__(self, key: str):
        dotted = f"{self.prefix}.{key}" if self.prefix else key
        raise ConfigError(f"Missing config key '{dotted}'.", dotted)


def _section(document: Dict[str, Any], name: str, prefix: str = "") -> _Section:
    dotted = f"{prefix}.{name}" if prefix else name
    section = document.get(name) or {}
    if not isinstance(section, dict):
        raise ConfigError(f"'{dotted}' must be a mapping.", dotted)
    return _Section(dotted, section)


def _build(document: Dict[str, Any], base_dir: str, path: str) -> RunConfig:
    document = _Section("", document)
    opo = _section(document, "opo")
    pump = _section(document, "pump")
    detection = _section(document, "detection")
    spectra = _section(document, "spectra")
    criteria = _section(document, "criteria")
    trace = _section(document, "trace")
    fit = _section(document, "fit")

    try:
        common = dict(
            t_out=_number(opo["t_out"], "opo.t_out"),
            mu_loss=_number(opo["mu_loss"], "opo.mu_loss"),
            cavity_fwhm_hz=_frequency(opo["cavity_fwhm"], "opo.cavity_fwhm"),
            mu_loss_err=_number(opo.get("mu_loss_err", 0.0), "opo.mu_loss_err"),
        )
        if "sigma_pump" in opo:
            opo_params = OpoParams(sigma_pump=_number(opo["sigma_pump"], "opo.sigma_pump"), **common)
        else:
            opo_params = OpoParams.from_power_ratio(_number(opo["pump_power_ratio"], "opo.pump_power_ratio"), **common)
    except ValidationError as error:
        raise _wrap(error, "opo") from error

    try:
        pump_model = PumpNoiseModel(
            v0_raw=_table(pump["v0_raw"], "pump.v0_raw"),
            filter_fwhm_hz=_frequency(pump["filter_fwhm"], "pump.filter_fwhm"),
            filter_enabled=bool(pump.get("filter_enabled", True)),
            v0_raw_err=_number(pump.get("v0_raw_err", 0.0), "pump.v0_raw_err"),
        )
    except ValidationError as error:
        raise _wrap(error, "pump") from error

    try:
        chain = DetectionChain(
            quantum_efficiency=_number(detection["quantum_efficiency"], "detection.quantum_efficiency"),
            visibility=_number(detection["visibility"], "detection.visibility"),
            extra_electronic_loss=_number(detection.get("extra_electronic_loss", 0.0),
                                          "detection.extra_electronic_loss"),
        )
    except ValidationError as error:
        raise _wrap(error, "detection") from error

    v_ind_table = _table(document["individual_noise"], "individual_noise")

    spectra_settings = SpectraSettings(
        _frequency(spectra["min"], "spectra.min"),
        _frequency(spectra["max"], "spectra.max"),
        _integer(spectra["points"], "spectra.points"),
    )
    if spectra_settings.points < 1 or spectra_settings.min_hz > spectra_settings.max_hz:
        raise ConfigError("'spectra' needs points >= 1 and min <= max.", "spectra")

    source = str(criteria["source"])
    if source not in SOURCES:
        raise ConfigError(f"'criteria.source' must be one of {list(SOURCES)}, got {source!r}.", "criteria.source")

    trace_settings = TraceSettings(
        _frequency(trace["freq"], "trace.freq"),
        str(trace["mode"]),
        _integer(trace["phase_points"], "trace.phase_points"),
        _frequency(trace["rbw"], "trace.rbw"),
        _frequency(trace["vbw"], "trace.vbw"),
    )
    if trace_settings.mode not in MODES:
        raise ConfigError(f"'trace.mode' must be one of {list(MODES)}, got {trace_settings.mode!r}.", "trace.mode")
    if trace_settings.phase_points < 2:
        raise ConfigError("'trace.phase_points' must be >= 2.", "trace.phase_points")

    measurements_path = str(document["measurements"])
    if not os.path.isabs(measurements_path):
        measurements_path = os.path.join(base_dir, measurements_path)
    if not os.path.exists(measurements_path):
        raise ConfigError(f"Measurements file {measurements_path} does not exist.", "measurements")
    measurements = ObservationTable.read(measurements_path)

    reported = {}
    for name, entry in _section(document, "reported_criteria").items():
        try:
            reported[name] = Estimate(_number(entry["value"], f"reported_criteria.{name}.value"),
                                      _number(entry.get("err", 0.0), f"reported_criteria.{name}.err"))
        except (KeyError, TypeError) as error:
            raise ConfigError(f"'reported_criteria.{name}' needs a 'value'.", f"reported_criteria.{name}") from error

    if not isinstance(fit["free_params"], list) or not isinstance(fit["observations"], list):
        raise ConfigError("'fit.free_params' and 'fit.observations' must be lists.", "fit")
    free_params = tuple(fit["free_params"])
    unknown = [name for name in free_params if name not in FREE_PARAMETERS]
    if unknown:
        raise ConfigError(f"'fit.free_params' must be among {list(FREE_PARAMETERS)}, got {unknown}.",
                          "fit.free_params")
    fit_settings = FitSettings(
        free_params=free_params,
        observations=tuple(str(label) for label in fit["observations"]),
        bounds={name: _bounds(value, f"fit.bounds.{name}")
                for name, value in _section(fit, "bounds", "fit").items()},
        grid_points=_integer(fit["grid_points"], "fit.grid_points"),
        max_iterations=_integer(fit["max_iterations"], "fit.max_iterations"),
        tolerance=_number(fit["tolerance"], "fit.tolerance"),
    )

    return RunConfig(opo_params, pump_model, chain, v_ind_table, spectra_settings,
                     _frequency(criteria["freq"], "criteria.freq"), source, trace_settings,
                     measurements, reported, fit_settings, path)


def _wrap(error: ValidationError, section: str) -> ConfigError:
    if isinstance(error, ConfigError):
        return error
    dotted = f"{section}.{error.field.removesuffix('_hz')}" if error.field else section
    return ConfigError(f"Invalid value for '{dotted}': {error}", dotted)


def _bounds(value: Any, name: str) -> Tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(f"'{name}' must be a pair [lo, hi], got {value!r}.", name)
    return _number(value[0], name), _number(value[1], name)
