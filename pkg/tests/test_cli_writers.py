import json
import os

import pandas
import pytest
from pandas import read_csv

from OPONoise.__version__ import __version__
from OPONoise.cli import write_artifacts, write_frame, write_metadata
from OPONoise.cli.writers import artifact_filename
from OPONoise.errors import OutputError


@pytest.fixture
def frame():
    return pandas.DataFrame({"freq_hz": [20e6, 6e6], "value": [0.1 + 0.2, 1.0]})


def test_write_frame_to_stdout(capsys, frame):
    write_frame(frame)

    assert capsys.readouterr().out == "freq_hz,value\n20000000,0.3\n6000000,1\n"


@pytest.mark.parametrize("extension, separator", [["csv", ","], ["tsv", "\t"]])
def test_write_frame_to_file(tmp_path, frame, extension, separator):
    filename = os.path.join(tmp_path, f"out.{extension}")

    write_frame(frame, filename)
    actual = read_csv(filename, sep=separator)

    assert actual["value"].tolist() == pytest.approx([0.3, 1.0])


@pytest.mark.parametrize("out, name, expected", [
    ["results.csv", "trace", "results_trace.csv"],
    ["run/results.tsv", "locked", "run/results_locked.tsv"],
    ["results", "trace", "results_trace.csv"],
])
def test_artifact_filename(out, name, expected):
    assert artifact_filename(out, name) == expected


def test_single_artifact_goes_to_out(tmp_path, frame):
    out = os.path.join(tmp_path, "spectra.csv")

    written = write_artifacts({"spectra": frame}, out)

    assert written == {"spectra": out}
    assert os.path.exists(out)


def test_several_artifacts_to_files(tmp_path, frame):
    out = os.path.join(tmp_path, "fig2.csv")

    written = write_artifacts({"locked": frame, "criteria": frame.head(1)}, out)

    assert written == {"locked": os.path.join(tmp_path, "fig2_locked.csv"),
                       "criteria": os.path.join(tmp_path, "fig2_criteria.csv")}
    assert len(read_csv(written["criteria"])) == 1


def test_several_artifacts_to_stdout(capsys, frame):
    written = write_artifacts({"locked": frame.head(1), "criteria": frame.tail(1)})

    assert written == {}
    assert capsys.readouterr().out == "# locked\nfreq_hz,value\n20000000,0.3\n# criteria\nfreq_hz,value\n6000000,1\n"


def test_write_metadata(tmp_path):
    out = os.path.join(tmp_path, "table1.csv")

    filename = write_metadata(out, "reproduce", {"target": "table1"}, "config.yaml", {"table1": out})

    with open(filename) as stream:
        actual = json.load(stream)
    assert filename == out + ".meta.json"
    assert actual["version"] == __version__
    assert actual["command"] == "reproduce"
    assert actual["arguments"] == {"target": "table1"}
    assert actual["config"] == "config.yaml"
    assert actual["outputs"] == {"table1": out}
    assert "created_utc" in actual


def test_write_frame_into_missing_directory(tmp_path, frame):
    filename = os.path.join(tmp_path, "absent", "out.csv")

    with pytest.raises(OutputError) as exception:
        write_frame(frame, filename)

    assert exception.value.args[0].startswith(f"Cannot write {filename}")


def test_write_metadata_into_missing_directory(tmp_path):
    with pytest.raises(OutputError):
        write_metadata(os.path.join(tmp_path, "absent", "out.csv"), "spectra", {}, None, {})
