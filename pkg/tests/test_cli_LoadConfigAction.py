import argparse

import pytest

from OPONoise.cli import LoadConfigAction, RunConfig
from OPONoise.cli.RunConfig import default_config_path
from OPONoise.errors import ConfigError
from tests.fixtures.data import write_config


@pytest.fixture
def parser():
    parser = argparse.ArgumentParser()
    parser.add_argument("--config", type=str, action=LoadConfigAction)
    return parser


def test_load_config(parser):
    args = parser.parse_args(["--config", default_config_path()])

    assert isinstance(args.config, RunConfig)
    assert args.config_path == default_config_path()
    assert args.config.criteria_freq_hz == 20e6


def test_invalid_config(tmp_path, parser):
    path = write_config(tmp_path, "opo: [1, 2\n")

    with pytest.raises(ConfigError):
        parser.parse_args(["--config", path])
