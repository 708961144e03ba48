import logging
import math

import pytest

from OPONoise.errors import ValidationError
from OPONoise.model import DetectionChain, FrequencyTable, OpoParams, PumpNoiseModel
from tests.builders import OpoParamsBuilder


def test_from_power_ratio():
    sut = OpoParams.from_power_ratio(1.1, t_out=0.05, mu_loss=0.036, cavity_fwhm_hz=50e6)

    assert sut.sigma_pump == pytest.approx(math.sqrt(1.1))
    assert sut.sigma_pump == pytest.approx(1.04881, abs=1e-5)


def test_escape_efficiency():
    assert OpoParamsBuilder().build().escape_efficiency == pytest.approx(0.05 / 0.086)


@pytest.mark.parametrize("builder, field", [
    [OpoParamsBuilder().with_t_out(0.0), "t_out"],
    [OpoParamsBuilder().with_t_out(1.5), "t_out"],
    [OpoParamsBuilder().with_mu_loss(-0.01), "mu_loss"],
    [OpoParamsBuilder().with_sigma_pump(0.9), "sigma_pump"],
    [OpoParamsBuilder().with_cavity_fwhm(0.0), "cavity_fwhm_hz"],
    [OpoParamsBuilder().with_mu_loss_err(-1.0), "mu_loss_err"],
])
def test_invalid_opo_params(builder, field):
    with pytest.raises(ValidationError) as exception:
        builder.build()

    assert exception.value.field == field


def test_power_ratio_below_threshold():
    with pytest.raises(ValidationError) as exception:
        OpoParams.from_power_ratio(0.5, t_out=0.05, mu_loss=0.036, cavity_fwhm_hz=50e6)

    assert exception.value.field == "pump_power_ratio"


def test_warns_far_above_threshold(caplog):
    with caplog.at_level(logging.WARNING, logger="OPONoise.model.OpoParams"):
        OpoParamsBuilder().with_sigma_pump(1.37).build()

    assert "far from threshold" in caplog.text


def test_detection_efficiency():
    assert DetectionChain(0.95, 0.98).efficiency == pytest.approx(0.91238)
    assert DetectionChain(0.95, 0.98, 0.1).efficiency == pytest.approx(0.91238 * 0.9)
    assert DetectionChain.ideal().efficiency == 1.0


@pytest.mark.parametrize("args, field", [
    [(0.0, 0.98), "quantum_efficiency"],
    [(0.95, 1.1), "visibility"],
    [(0.95, 0.98, 1.0), "extra_electronic_loss"],
])
def test_invalid_detection_chain(args, field):
    with pytest.raises(ValidationError) as exception:
        DetectionChain(*args)

    assert exception.value.field == field


def test_pump_noise_below_shot_noise():
    with pytest.raises(ValidationError) as exception:
        PumpNoiseModel(FrequencyTable([1e6, 2e6], [2.0, 0.5]), 3.5e6)

    assert exception.value.field == "v0_raw"


def test_pump_filter_linewidth():
    with pytest.raises(ValidationError) as exception:
        PumpNoiseModel.constant(10.0, 0.0)

    assert exception.value.field == "filter_fwhm_hz"
