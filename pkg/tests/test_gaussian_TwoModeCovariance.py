import numpy
import pytest

from OPONoise.errors import ValidationError
from OPONoise.gaussian import ModeBasis, TwoModeCovariance


def test_vacuum():
    sut = TwoModeCovariance.vacuum()

    numpy.testing.assert_array_equal(sut.entries, numpy.identity(4))
    assert sut.basis is ModeBasis.SignalIdler


@pytest.mark.parametrize("entries, message", [
    [numpy.identity(3), "Covariance matrix must be 4x4, got shape (3, 3)."],
    [numpy.diag([1.0, 1.0, 1.0, numpy.nan]), "Covariance matrix contains non-finite entries."],
    [numpy.identity(4) + numpy.triu(numpy.ones((4, 4)), 1) * 0.1, "Covariance matrix is not symmetric."],
    [numpy.diag([1.0, 1.0, 1.0, 0.0]), "Covariance matrix is not positive definite."],
    [numpy.diag([1.0, -1.0, 1.0, 1.0]), "Covariance matrix is not positive definite."],
])
def test_invalid_entries(entries, message):
    with pytest.raises(ValidationError) as exception:
        TwoModeCovariance(entries)

    assert exception.value.args[0] == message
    assert exception.value.field == "entries"


def test_symmetry_tolerance():
    entries = numpy.identity(4)
    entries[0, 2] = 0.3
    entries[2, 0] = 0.3 + 1e-13

    sut = TwoModeCovariance(entries)
    assert sut.entries[2, 0] == pytest.approx(0.3)


def test_entries_are_read_only():
    sut = TwoModeCovariance.vacuum()

    with pytest.raises(ValueError):
        sut.entries[0, 0] = 2.0


def test_block():
    entries = numpy.diag([0.6761, 5.5, 2.0, 3.0])
    sut = TwoModeCovariance(entries)

    numpy.testing.assert_array_equal(sut.block(0), [[0.6761, 0.0], [0.0, 5.5]])
    numpy.testing.assert_array_equal(sut.block(1), [[2.0, 0.0], [0.0, 3.0]])


def test_scaled():
    actual = TwoModeCovariance.vacuum().scaled(2.0)
    numpy.testing.assert_array_equal(actual.entries, 2.0 * numpy.identity(4))


@pytest.mark.parametrize("other, expected", [
    [TwoModeCovariance.vacuum(), True],
    [TwoModeCovariance.vacuum(ModeBasis.RotatedPlusMinus), False],
    [TwoModeCovariance(2.0 * numpy.identity(4)), False],
    [numpy.identity(4), False],
])
def test_equality(other, expected):
    assert (TwoModeCovariance.vacuum() == other) == expected
