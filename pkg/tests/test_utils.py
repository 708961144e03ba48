import pytest

import OPONoise.utils as Utils
from OPONoise.errors import ValidationError


@pytest.mark.parametrize("first, second, expected", [
    [["freq", "frequency_hz", "freq_hz"], ["freq_hz", "frequency_hz"], "frequency_hz"],
    [["quantity"], ["label"], None],
])
def test_get_first_common_element(first, second, expected):
    actual = Utils.get_first_common_element(first, second)

    assert actual == expected


@pytest.mark.parametrize("filename, expected", [("spectra.csv", ","), ("spectra.tsv", "\t"), ("spectra", ",")])
def test_define_separator(filename, expected):
    actual = Utils.define_separator(filename)

    assert actual == expected


@pytest.mark.parametrize("filename, expected", [("run/table1.csv", "csv"), ("trace.tsv", "tsv"), ("trace", "")])
def test_get_extension(filename, expected):
    actual = Utils.get_extension(filename)
    assert actual == expected


@pytest.mark.parametrize("values, expected", [
    [[1e6, 6e6, 20e6], True],
    [[6e6, 6e6], True],
    [[20e6, 6e6], False],
])
def test_is_sorted(values, expected):
    actual = Utils.is_sorted(values)
    assert actual == expected


@pytest.mark.parametrize("column_names, expected", [
    [[" Freq_Hz "], ["freq_hz"]],
    [["ERR_DB", "db"], ["err_db", "db"]],
])
def test_clean_column_names(column_names, expected):
    actual = Utils.clean_column_names(column_names)
    assert actual == expected


@pytest.mark.parametrize("value, expected", [
    [20e6, 20e6],
    [3500000, 3.5e6],
    ["20e6", 20e6],
    ["3.5 MHz", 3.5e6],
    ["100 kHz", 1e5],
    ["1 GHz", 1e9],
])
def test_parse_frequency(value, expected):
    actual = Utils.parse_frequency(value)
    assert actual == pytest.approx(expected)


@pytest.mark.parametrize("value", ["3 m", "fast", True])
def test_parse_frequency_invalid(value):
    with pytest.raises(ValidationError) as exception:
        Utils.parse_frequency(value, "trace.freq")

    assert exception.value.field == "trace.freq"
