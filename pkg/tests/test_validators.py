"""Test for validators."""
import math

import pytest

from tsnc.utils.errors import DomainError
from tsnc.utils.validators import validate_non_negative, validate_positive, validate_range


@pytest.mark.parametrize("value", [0, 0., 3, 2.5e-6])
def test_validate_non_negative(value):
    result = validate_non_negative(value, "x")
    assert isinstance(result, float)
    assert result == value


@pytest.mark.parametrize("value", [-1, -1e-12, math.inf, math.nan, True, "1", None])
def test_validate_non_negative_rejects(value):
    with pytest.raises(DomainError):
        validate_non_negative(value, "x")


def test_validate_positive():
    assert validate_positive(1, "rate") == 1.
    with pytest.raises(DomainError, match="rate"):
        validate_positive(0, "rate")


def test_validate_range():
    assert validate_range(1, 2, "burst") == (1., 2.)
    assert validate_range(2, 2, "burst") == (2., 2.)
    with pytest.raises(DomainError, match="low <= high"):
        validate_range(3, 2, "burst")
    with pytest.raises(DomainError):
        validate_range(-1, 2, "burst")


def test_domain_error_is_value_error():
    with pytest.raises(ValueError):
        validate_non_negative(-1, "x")
