import pytest

from OPONoise.criteria import DbValue
from OPONoise.errors import ValidationError
from OPONoise.fit import DEFAULT_BOUNDS, Observation, ObservedQuantity
from tests.builders import FitProblemBuilder


def test_default_bounds():
    sut = FitProblemBuilder().with_free_params(["mu_loss", "v0_raw_level"]).build()
    assert sut.bounds == {"mu_loss": DEFAULT_BOUNDS["mu_loss"], "v0_raw_level": DEFAULT_BOUNDS["v0_raw_level"]}


def test_bounds_override():
    sut = FitProblemBuilder().with_bounds("mu_loss", (0.01, 0.1)).build()
    assert sut.bounds["mu_loss"] == (0.01, 0.1)


@pytest.mark.parametrize("builder, field", [
    [FitProblemBuilder().with_free_params([]), "free_params"],
    [FitProblemBuilder().with_free_params(["t_out"]), "free_params"],
    [FitProblemBuilder().with_free_params(["mu_loss", "mu_loss"]), "free_params"],
    [FitProblemBuilder().with_bounds("mu_loss", (0.1, 0.01)), "bounds"],
    [FitProblemBuilder().with_bounds("mu_loss", (0.0, 0.1)), "bounds"],
    [FitProblemBuilder().with_bounds("mu_loss", (0.01, float("inf"))), "bounds"],
    [FitProblemBuilder().with_grid_points(10), "grid_points"],
    [FitProblemBuilder().with_tolerance(0.0), "tolerance"],
])
def test_invalid_problem(builder, field):
    with pytest.raises(ValidationError) as exception:
        builder.build()

    assert exception.value.field == field


def test_linear_parameter_accepts_zero_lower_bound():
    sut = FitProblemBuilder().with_free_params(["v_ind_level"]).with_bounds("v_ind_level", (0.0, 10.0)).build()
    assert sut.bounds["v_ind_level"] == (0.0, 10.0)


@pytest.mark.parametrize("quantity, expected", [["GX", ObservedQuantity.GX], [" vind", ObservedQuantity.VIND]])
def test_observation_quantity_from_string(quantity, expected):
    assert Observation(1e6, quantity, DbValue(0.0)).quantity is expected


@pytest.mark.parametrize("freq_hz, quantity, field", [[0.0, "GX", "freq_hz"], [1e6, "GZ", "quantity"]])
def test_invalid_observation(freq_hz, quantity, field):
    with pytest.raises(ValidationError) as exception:
        Observation(freq_hz, quantity, DbValue(0.0))

    assert exception.value.field == field
