import numpy
import pytest

from OPONoise.criteria import (Estimate, duan, epr_closed_form, epr_from_covariance, error_agrees, evaluate_all,
                               mancini)
from OPONoise.errors import DomainError
from OPONoise.gaussian import TwoModeCovariance, build_covariance
from OPONoise.model import DetectionChain, FrequencyTable, PumpNoiseModel, noise_point
from tests.builders import NoisePointBuilder, OpoParamsBuilder
from tests.fixtures import measured_20mhz, measured_6mhz, vacuum_point


@pytest.mark.parametrize("g_x, g_y, expected", [
    [1.0, 1.0, 1.0],
    [0.6761, 0.8318, 0.562],
    [0.5370, 0.8913, 0.479],
])
def test_mancini(g_x, g_y, expected):
    assert mancini(Estimate(g_x), Estimate(g_y)).value == pytest.approx(expected, abs=1e-3)


@pytest.mark.parametrize("g_x, g_y, expected", [
    [Estimate(1.0), Estimate(1.0), Estimate(1.0)],
    [Estimate(0.6761, 0.1246), Estimate(0.8318, 0.1341), Estimate(0.754, 0.092)],
    [Estimate(0.5370), Estimate(0.8913), Estimate(0.714)],
])
def test_duan(g_x, g_y, expected):
    actual = duan(g_x, g_y)

    assert actual.value == pytest.approx(expected.value, abs=1e-3)
    assert actual.err == pytest.approx(expected.err, abs=1e-3)


def test_duan_error_agrees_with_reported():
    actual = duan(Estimate(0.6761, 0.1246), Estimate(0.8318, 0.1341))
    assert error_agrees(actual.err, 0.1)


def test_mancini_error():
    actual = mancini(Estimate(0.6761, 0.1246), Estimate(0.8318, 0.1341))

    assert actual.err == pytest.approx(0.1376, abs=1e-3)
    assert not error_agrees(actual.err, 0.10)


@pytest.mark.parametrize("inputs, expected", [
    [(1.0, 1.0, 1.0, 1.0), 1.0],
    [(0.6761, 0.8318, 1.0, 1.0), 0.870],
    [(0.5370, 0.8913, 4.467, 4.467), 1.620],
])
def test_epr_closed_form(inputs, expected):
    actual = epr_closed_form(*[Estimate(value) for value in inputs])
    assert actual.value == pytest.approx(expected, abs=1e-3)


def test_epr_closed_form_refuses_negative_factor():
    with pytest.raises(DomainError) as exception:
        epr_closed_form(Estimate(1.0), Estimate(0.8), Estimate(0.4), Estimate(1.0))

    assert "X quadrature" in exception.value.args[0]


def test_epr_from_covariance_vacuum():
    assert epr_from_covariance(TwoModeCovariance.vacuum()) == pytest.approx(1.0)


@pytest.mark.parametrize("inputs, expected", [
    [(0.6761, 0.8318, 1.0, 1.0), 0.870],
    [(0.5370, 0.8913, 4.467, 4.467), 1.620],
])
def test_epr_routes_agree(inputs, expected):
    actual = epr_from_covariance(build_covariance(*inputs, validate=False))
    closed_form = epr_closed_form(*[Estimate(value) for value in inputs])

    assert actual == pytest.approx(expected, abs=1e-3)
    assert actual == pytest.approx(closed_form.value, abs=1e-12)


def test_zero_input_errors_give_zero_errors():
    inputs = [Estimate(0.6761), Estimate(0.8318), Estimate(1.2), Estimate(1.3)]

    assert mancini(*inputs[:2]).err == 0.0
    assert duan(*inputs[:2]).err == 0.0
    assert epr_closed_form(*inputs).err == 0.0


def test_epr_error_propagates_all_inputs():
    base = [Estimate(0.6761), Estimate(0.8318), Estimate(1.2), Estimate(1.3)]
    for index in range(4):
        inputs = list(base)
        inputs[index] = Estimate(base[index].value, 0.1)
        assert epr_closed_form(*inputs).err > 0.0


def test_mancini_bounded_by_squared_duan():
    rng = numpy.random.default_rng(20)
    for g_x, g_y in rng.uniform(1e-3, 10.0, size=(1000, 2)):
        assert mancini(Estimate(g_x), Estimate(g_y)).value <= duan(Estimate(g_x), Estimate(g_y)).value ** 2 + 1e-12


def test_criteria_are_symmetric():
    rng = numpy.random.default_rng(21)
    for _ in range(1000):
        g_x, g_y = rng.uniform(0.1, 1.0, size=2)
        v_x, v_y = rng.uniform(1.0, 5.0, size=2)
        assert mancini(Estimate(g_x), Estimate(g_y)).value == pytest.approx(
            mancini(Estimate(g_y), Estimate(g_x)).value, rel=1e-14)
        assert duan(Estimate(g_x), Estimate(g_y)).value == pytest.approx(
            duan(Estimate(g_y), Estimate(g_x)).value, rel=1e-14)
        assert epr_closed_form(Estimate(g_x), Estimate(g_y), Estimate(v_x), Estimate(v_y)).value == pytest.approx(
            epr_closed_form(Estimate(g_y), Estimate(g_x), Estimate(v_y), Estimate(v_x)).value, rel=1e-14)


def test_criteria_increase_with_g():
    g_values = numpy.linspace(0.1, 1.0, 46)
    v = 1.5
    mancini_values = [mancini(Estimate(g), Estimate(0.8)).value for g in g_values]
    duan_values = [duan(Estimate(g), Estimate(0.8)).value for g in g_values]
    epr_values = [epr_closed_form(Estimate(g), Estimate(0.8), Estimate(v), Estimate(v)).value for g in g_values]

    assert numpy.all(numpy.diff(mancini_values) > 0)
    assert numpy.all(numpy.diff(duan_values) > 0)
    assert numpy.all(numpy.diff(epr_values) > 0)


def test_evaluate_all_twenty_mhz(measured_20mhz):
    actual = evaluate_all(measured_20mhz)

    assert actual.mancini.value == pytest.approx(0.5623, abs=1e-4)
    assert actual.duan.value == pytest.approx(0.7539, abs=1e-4)
    assert actual.duan.err == pytest.approx(0.0915, abs=1e-4)
    assert actual.epr.value == pytest.approx(0.8697, abs=1e-4)
    assert actual.verdict_inseparable_mancini
    assert actual.verdict_inseparable_duan
    assert actual.verdict_epr
    assert not actual.state_physical
    assert actual.epr_covariance is None


def test_evaluate_all_six_mhz(measured_6mhz):
    actual = evaluate_all(measured_6mhz)

    assert actual.duan.value == pytest.approx(0.714, abs=0.1)
    assert actual.epr.value > 1.0
    assert not actual.verdict_epr
    assert actual.state_physical
    assert actual.epr_covariance == pytest.approx(actual.epr.value, abs=1e-10)


def test_evaluate_all_vacuum(vacuum_point):
    actual = evaluate_all(vacuum_point)

    assert actual.mancini.value == actual.duan.value == actual.epr.value == pytest.approx(1.0)
    assert not actual.verdict_inseparable_mancini
    assert not actual.verdict_inseparable_duan
    assert not actual.verdict_epr
    assert actual.epr_covariance == pytest.approx(1.0)


def test_evaluate_all_excess_pump_noise():
    params = OpoParamsBuilder().build()
    pump = PumpNoiseModel.constant(100.0, 3.5e6, filter_enabled=False)
    point = noise_point(3.5e6, params, pump, DetectionChain(0.95, 0.98), FrequencyTable.constant(1.0))

    actual = evaluate_all(point)

    assert point.g_y == pytest.approx(5.105, abs=1e-3)
    assert actual.mancini.value > 1.0
    assert actual.duan.value > 1.0
    assert not actual.verdict_inseparable_duan
    assert not actual.verdict_epr


def test_evaluate_all_records_epr_not_evaluable():
    point = NoisePointBuilder().with_g(1.0, 0.8).with_v_ind(0.4, 1.0).build()

    actual = evaluate_all(point)

    assert actual.epr is None
    assert not actual.epr_evaluable
    assert not actual.verdict_epr
    assert actual.duan.value == pytest.approx(0.9)
