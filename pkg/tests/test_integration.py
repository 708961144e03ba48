import os

import pytest
from pandas import read_csv
from pandas.testing import assert_frame_equal

from OPONoise.__main__ import main
from OPONoise.cli.RunConfig import default_config_path
from tests.fixtures.data import data_location, write_config


def test_reproduce_table1(tmp_path):
    out = os.path.join(tmp_path, "table1.csv")

    code = main(["reproduce", "table1", "--config", default_config_path(), "--out", out])

    assert code == 0
    actual = read_csv(out)
    expected = read_csv(os.path.join(data_location, "integration", "table1.csv"))
    assert_frame_equal(actual, expected, rtol=1e-5)
    assert os.path.exists(out + ".meta.json")


def test_reproduce_fig2_writes_one_file_per_artifact(tmp_path):
    out = os.path.join(tmp_path, "fig2.csv")

    code = main(["reproduce", "--target", "fig2", "--config", default_config_path(), "--out", out])

    assert code == 0
    assert len(read_csv(os.path.join(tmp_path, "fig2_locked.csv"))) == 2
    assert len(read_csv(os.path.join(tmp_path, "fig2_criteria.csv"))) == 1


def test_spectra_is_deterministic(tmp_path):
    outputs = [os.path.join(tmp_path, f"spectra_{index}.tsv") for index in range(2)]

    for out in outputs:
        assert main(["spectra", "--config", default_config_path(), "--points", "12", "--out", out]) == 0

    with open(outputs[0], "rb") as first, open(outputs[1], "rb") as second:
        assert first.read() == second.read()


def test_trace_to_stdout(capsys):
    code = main(["trace", "--config", default_config_path(), "--freq", "3.5 MHz", "--mode", "plus"])

    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0] == "phase_rad,variance,variance_db"
    assert len(lines) == 65


def test_invalid_config_fails_with_one_line(tmp_path, capsys):
    path = write_config(tmp_path, "opo:\n  t_out: 0\n")

    code = main(["criteria", "--config", path])

    err = capsys.readouterr().err.strip().splitlines()
    assert code == 1
    assert err[-1].startswith("error: ConfigError: Invalid value for 'opo.t_out'")


def test_empty_section_runs_with_defaults(tmp_path):
    path = write_config(tmp_path, "opo:\nfit:\n")

    assert main(["criteria", "--config", path]) == 0


@pytest.mark.parametrize("extra, expected", [
    [["fit", "--observations", "absent.csv"], "error: ConfigError: Cannot read observation file"],
    [["spectra", "--out", os.path.join("absent", "spectra.csv")], "error: OutputError: Cannot write"],
])
def test_io_failure_fails_with_one_line(tmp_path, capsys, extra, expected):
    argv = [extra[0], "--config", default_config_path()] + [
        os.path.join(tmp_path, value) if value.startswith("absent") else value for value in extra[1:]]

    code = main(argv)

    err = capsys.readouterr().err.strip().splitlines()
    assert code == 1
    assert err[-1].startswith(expected)


def test_non_numeric_observation_fails_with_one_line(tmp_path, capsys):
    filename = os.path.join(tmp_path, "levels.csv")
    with open(filename, "w") as stream:
        stream.write("freq_hz,quantity,db\n20000000,GX,abc\n")

    code = main(["fit", "--config", default_config_path(), "--observations", filename])

    assert code == 1
    assert capsys.readouterr().err.strip().splitlines()[-1].startswith(f"error: ConfigError: {filename}, line 2:")


def test_conflicting_targets(capsys):
    code = main(["reproduce", "fig2", "--target", "fig3", "--config", default_config_path()])

    assert code == 1
    assert "error: ValidationError: Conflicting targets" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["spectra"],
    ["criteria", "--source", "simulated", "--config", "config.yaml"],
    ["simulate", "--config", "config.yaml"],
])
def test_usage_error(argv):
    with pytest.raises(SystemExit) as exception:
        main(argv)

    assert exception.value.code == 2
