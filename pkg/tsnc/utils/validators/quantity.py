"""
This module contains validation logic for numeric parameters
"""
import math
import typing

from tsnc.utils.errors import DomainError


def validate_non_negative(value: float, name: str) -> float:
    """Checks that `value` is a finite number greater or equal to zero.

    Args:
        value (float): The value to check.
        name (str): Name of the parameter, used in the error message.

    Returns:
        (float): The value as a float.
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"The parameter '{name}' must be a number and not '{value!r}'.")
    if not math.isfinite(value) or value < 0:
        raise DomainError(f"The parameter '{name}' must be finite and >= 0 and not '{value}'.")
    return float(value)


def validate_positive(value: float, name: str) -> float:
    """Checks that `value` is a finite number strictly greater than zero."""
    value = validate_non_negative(value, name)
    if value == 0:
        raise DomainError(f"The parameter '{name}' must be > 0.")
    return value


def validate_range(
        low: float,
        high: float,
        name: str
) -> typing.Tuple[float, float]:
    """Checks that a `(low, high)` range is ordered and non-negative.

    Args:
        low (float): Lower end of the range (inclusive).
        high (float): Upper end of the range (inclusive).
        name (str): Name of the parameter, used in the error message.

    Returns:
        (tuple[float, float]): The validated range.
    """
    low = validate_non_negative(low, name)
    high = validate_non_negative(high, name)
    if low > high:
        raise DomainError(f"The range of '{name}' must satisfy low <= high and not "
                          f"'({low}, {high})'.")
    return low, high
