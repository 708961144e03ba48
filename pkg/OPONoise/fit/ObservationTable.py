import csv
import math
from typing import Iterable, List, Optional

import pandas
from pandas import read_csv

from OPONoise.criteria import DbValue
from OPONoise.errors import ConfigError, ValidationError
from OPONoise.utils import clean_column_names, define_separator, get_first_common_element, parse_frequency

from .Observation import Observation


class ObservationTable:
    """ Measured noise levels read from a CSV or TSV file.

    Columns are matched case-insensitively through the aliases below; `label` and
    `err_db` are optional, an empty `err_db` cell means the error is unknown.
    """
    _freq_column_names = ["freq_hz", "frequency_hz", "freq", "frequency"]
    _quantity_column_names = ["quantity"]
    _db_column_names = ["db", "measured_db", "level_db"]
    _err_column_names = ["err_db", "error_db", "db_err"]
    _label_column_names = ["label", "name"]

    def __init__(self, observations: Iterable[Observation], filename: Optional[str] = None):
        self._observations = list(observations)
        self._filename = filename

    @classmethod
    def read(cls, filename: str) -> "ObservationTable":
        """Load observations from file.

        Args:
            filename (str): Path to a CSV or TSV file.

        Returns:
            ObservationTable: Observations in file order.
        """
        try:
            data = read_csv(filename, sep=None, engine="python")
        except OSError as error:
            raise ConfigError(f"Cannot read observation file {filename}: {error.strerror or error}.",
                              "observations") from error
        except (ValueError, csv.Error) as error:
            raise ConfigError(f"Cannot parse observation file {filename}: {error}", "observations") from error
        data.columns = clean_column_names(data.columns)

        freq_column = cls._require_column(data, cls._freq_column_names, filename)
        quantity_column = cls._require_column(data, cls._quantity_column_names, filename)
        db_column = cls._require_column(data, cls._db_column_names, filename)
        err_column = get_first_common_element(data.columns, cls._err_column_names)
        label_column = get_first_common_element(data.columns, cls._label_column_names)

        observations = []
        for row_number, row in enumerate(data.to_dict("records"), start=2):
            try:
                observations.append(Observation(
                    freq_hz=parse_frequency(row[freq_column], "freq_hz"),
                    quantity=str(row[quantity_column]),
                    measured=DbValue(float(row[db_column]), _optional_float(row, err_column)),
                    label=None if label_column is None else str(row[label_column]),
                ))
            except ValidationError as error:
                raise ConfigError(f"{filename}, line {row_number}: {error}", error.field, row_number) from error
            except (TypeError, ValueError) as error:
                raise ConfigError(f"{filename}, line {row_number}: {error}", None, row_number) from error
        return cls(observations, filename)

    @classmethod
    def _require_column(cls, data: pandas.DataFrame, names: List[str], filename: str) -> str:
        column = get_first_common_element(data.columns, names)
        if column is None:
            raise ConfigError(f"{filename} has none of the columns {names}.", names[0])
        return column

    def write(self, filename: str) -> None:
        """ Write observations to disk. Supports 'csv' and 'tsv' formats. """
        if not filename.endswith((".csv", ".tsv")):
            raise ValueError("File extension must be 'csv' or 'tsv'.")
        separator = define_separator(filename)
        self.to_dataframe().to_csv(filename, index=False, sep=separator, float_format="%.12g", lineterminator="\n")

    def to_dataframe(self) -> pandas.DataFrame:
        return pandas.DataFrame({
            "label": [observation.label for observation in self._observations],
            "freq_hz": [observation.freq_hz for observation in self._observations],
            "quantity": [observation.quantity.value for observation in self._observations],
            "db": [observation.measured.db for observation in self._observations],
            "err_db": [observation.measured.err_db for observation in self._observations],
        })

    @property
    def filename(self) -> Optional[str]:
        return self._filename

    @property
    def observations(self) -> List[Observation]:
        return list(self._observations)

    def select(self, labels: Iterable[str]) -> List[Observation]:
        """Pick observations by label, in the order of `labels`.

        Args:
            labels (Iterable[str]): Labels to pick.

        Returns:
            List[Observation]: Selected observations.
        """
        by_label = {observation.label: observation for observation in self._observations}
        missing = [label for label in labels if label not in by_label]
        if missing:
            raise ConfigError(f"Unknown observation labels {missing}.", "fit.observations")
        return [by_label[label] for label in labels]

    def at_frequency(self, freq_hz: float, rel_tol: float = 1e-9) -> List[Observation]:
        return [observation for observation in self._observations
                if math.isclose(observation.freq_hz, freq_hz, rel_tol=rel_tol)]

    def __len__(self) -> int:
        return len(self._observations)


def _optional_float(row: dict, column: Optional[str]) -> Optional[float]:
    if column is None:
        return None
    value = row[column]
    if value is None or (isinstance(value, float) and math.isnan(value)) or str(value).strip() == "":
        return None
    return float(value)
