"""
This module contains the unit system: every quantity is normalized to bits, seconds or bits per
second when it is read, and converted back to a display unit only when it is written.
"""
import enum
import re
from dataclasses import dataclass
from typing import Optional, Union, Tuple

from tsnc.utils.errors import UnitError

__all__ = [
    "Dimension",
    "Quantity",
    "parse_quantity",
    "unit_dimension",
    "to_unit",
    "format_quantity",
]


class Dimension(enum.Enum):
    TIME = "time"
    DATA = "data"
    RATE = "rate"


# unit -> (dimension, numerator, denominator); normalized = value * numerator / denominator
_UNITS = {
    "s": (Dimension.TIME, 1, 1),
    "ms": (Dimension.TIME, 1, 10 ** 3),
    "us": (Dimension.TIME, 1, 10 ** 6),
    "ns": (Dimension.TIME, 1, 10 ** 9),
    "b": (Dimension.DATA, 1, 1),
    "B": (Dimension.DATA, 8, 1),
    "kb": (Dimension.DATA, 10 ** 3, 1),
    "kB": (Dimension.DATA, 8 * 10 ** 3, 1),
    "Mb": (Dimension.DATA, 10 ** 6, 1),
    "MB": (Dimension.DATA, 8 * 10 ** 6, 1),
    "bps": (Dimension.RATE, 1, 1),
    "kbps": (Dimension.RATE, 10 ** 3, 1),
    "Mbps": (Dimension.RATE, 10 ** 6, 1),
    "Gbps": (Dimension.RATE, 10 ** 9, 1),
}

_QUANTITY_PATTERN = re.compile(
    r"^\s*(?P<value>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(?P<unit>[A-Za-z]*)\s*$")


def _lookup(unit: str) -> Tuple[Dimension, int, int]:
    try:
        return _UNITS[unit]
    except KeyError:
        raise UnitError(f"Unknown unit '{unit}'. Known units are {sorted(_UNITS)}.") from None


def unit_dimension(unit: str) -> Dimension:
    """Dimension of a unit string, e.g. `Dimension.TIME` for "us"."""
    return _lookup(unit)[0]


def _check_unit(unit: str, dimension: Optional[Dimension]) -> Tuple[int, int]:
    unit_dim, numerator, denominator = _lookup(unit)
    if dimension is not None and unit_dim is not dimension:
        raise UnitError(f"The unit '{unit}' is a {unit_dim.value} unit, a {dimension.value} unit "
                        f"is expected here.")
    return numerator, denominator


@dataclass(frozen=True)
class Quantity:
    """A number with a unit, e.g. `Quantity(10, "us")`.

    Args:
        value (float): The magnitude (>= 0).
        unit (str): One of s, ms, us, ns, b, B, kb, kB, Mb, MB, bps, kbps, Mbps, Gbps.
    """
    value: float
    unit: str

    def __post_init__(self):
        _lookup(self.unit)
        if isinstance(self.value, bool) or not isinstance(self.value, (int, float)):
            raise UnitError(f"The value of a quantity must be a number and not '{self.value!r}'.")
        if not self.value >= 0:
            raise UnitError(f"Quantities must be non-negative and not '{self.value}'.")

    @property
    def dimension(self) -> Dimension:
        return unit_dimension(self.unit)

    @property
    def normalized(self) -> float:
        """Value in bits, seconds or bits per second."""
        numerator, denominator = _check_unit(self.unit, None)
        return self.value * numerator / denominator

    @classmethod
    def parse(cls, text: str, default_unit: Optional[str] = None) -> "Quantity":
        """Reads "10us" or "4Mbps"; a bare number takes `default_unit`."""
        match = _QUANTITY_PATTERN.match(text)
        if match is None:
            raise UnitError(f"Malformed quantity '{text}'.")
        unit = match.group("unit") or default_unit
        if unit is None:
            raise UnitError(f"The quantity '{text}' has no unit and no default unit is in scope.")
        return cls(value=float(match.group("value")), unit=unit)

    def __str__(self):
        return f"{self.value!r}{self.unit}"


def parse_quantity(
        value: Union[str, int, float, Quantity],
        dimension: Dimension,
        default_unit: Optional[str] = None
) -> float:
    """Normalizes a quantity written as text ("10us"), as a bare number or as a `Quantity`.

    An explicit unit always wins over `default_unit`, so "10us" is 1e-5 s whatever the scope.

    Args:
        value (str, int, float or Quantity): The quantity.
        dimension (Dimension): The dimension expected by the context.
        default_unit (str, optional): Unit of bare numbers. Defaults to `None`, in which case a
            bare number is an error.

    Returns:
        (float): The value in bits, seconds or bits per second.
    """
    if isinstance(value, Quantity):
        quantity = value
    elif isinstance(value, str):
        quantity = Quantity.parse(value, default_unit=default_unit)
    elif isinstance(value, (int, float)) and not isinstance(value, bool):
        if default_unit is None:
            raise UnitError(f"The number '{value}' has no unit and no default unit is in scope.")
        quantity = Quantity(value=value, unit=default_unit)
    else:
        raise UnitError(f"Cannot read a quantity from '{value!r}'.")
    numerator, denominator = _check_unit(quantity.unit, dimension)
    return quantity.value * numerator / denominator


def to_unit(value: float, unit: str) -> float:
    """Converts a normalized value into `unit`."""
    _, numerator, denominator = _lookup(unit)
    return value * denominator / numerator


def format_quantity(value: float, unit: str) -> str:
    """Writes a normalized value as text in `unit`, e.g. "10.0us"."""
    return f"{to_unit(value, unit)!r}{unit}"
