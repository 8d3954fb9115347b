"""
This module contains the elementary curves of the min-plus algebra: token buckets and
rate-latency curves, plus the marker for unbounded parameters.

Units are bits, seconds and bits per second throughout.
"""
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from tsnc.utils.validators import validate_non_negative, validate_positive

__all__ = ["REL_TOL", "TokenBucket", "RateLatency", "Unbounded", "UNBOUNDED", "is_close"]

REL_TOL = 1e-9  # relative tolerance of dominance tests during canonicalization


def is_close(a: float, b: float) -> bool:
    """Equality of two curve parameters within `REL_TOL`."""
    return math.isclose(a, b, rel_tol=REL_TOL, abs_tol=0.)


class Unbounded:
    """Marker for an unbounded parameter (a link without capacity, the no-op shaper, the
    neutral element of the service convolution). There is only one instance, `UNBOUNDED`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __reduce__(self):
        return Unbounded, ()


UNBOUNDED = Unbounded()


@dataclass(frozen=True)
class TokenBucket:
    """Token-bucket curve `t -> burst + rate * t`.

    Used as a single piece of an arrival curve and as a shaper with the link capacity as rate
    and the packet size as burst.

    Args:
        rate (float): Arrival rate in bits per second (>= 0).
        burst (float): Burst in bits (>= 0).
    """
    rate: float
    burst: float

    def __post_init__(self):
        object.__setattr__(self, "rate", validate_non_negative(self.rate, "rate"))
        object.__setattr__(self, "burst", validate_non_negative(self.burst, "burst"))

    def __call__(self, t: Union[float, np.ndarray]):
        return self.burst + self.rate * t


@dataclass(frozen=True)
class RateLatency:
    """Rate-latency curve `t -> rate * max(0, t - latency)`.

    Args:
        rate (float): Service rate in bits per second (> 0).
        latency (float): Latency in seconds (>= 0).
    """
    rate: float
    latency: float

    def __post_init__(self):
        object.__setattr__(self, "rate", validate_positive(self.rate, "rate"))
        object.__setattr__(self, "latency", validate_non_negative(self.latency, "latency"))

    def __call__(self, t: Union[float, np.ndarray]):
        return self.rate * np.maximum(0., t - self.latency)
