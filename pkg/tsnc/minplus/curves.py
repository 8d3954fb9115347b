"""
This module contains the piecewise-linear curves: concave arrival curves (minimum of token
buckets) and convex service curves (maximum of rate-latency curves).

Both curves are immutable and always kept in canonical form.
"""
import bisect
from typing import Iterable, Tuple, Union, List

import numpy as np

from tsnc.minplus.base import TokenBucket, RateLatency, REL_TOL, is_close
from tsnc.utils.errors import DomainError

__all__ = ["ConcaveCurve", "ConvexCurve"]


def _as_time_array(t) -> np.ndarray:
    t_array = np.asarray(t, dtype=float)
    if np.any(t_array < 0) or np.any(np.isnan(t_array)):
        raise DomainError(f"Curves are only defined for t >= 0 and not '{t}'.")
    return t_array


def _token_bucket_cross(first: TokenBucket, second: TokenBucket) -> float:
    # first.rate > second.rate and first.burst < second.burst
    return (second.burst - first.burst) / (first.rate - second.rate)


def _rate_latency_cross(first: RateLatency, second: RateLatency) -> float:
    # first.rate < second.rate and first.latency < second.latency
    return ((second.rate * second.latency - first.rate * first.latency)
            / (second.rate - first.rate))


def _canonical_token_buckets(pieces: Iterable[TokenBucket]) -> Tuple[TokenBucket, ...]:
    ordered = sorted(pieces, key=lambda piece: (-piece.rate, piece.burst))
    stack: List[TokenBucket] = []
    for piece in ordered:
        if stack and is_close(piece.rate, stack[-1].rate):
            if piece.burst >= stack[-1].burst:
                continue
            stack.pop()
        # a faster bucket without a smaller burst never binds
        while stack and (stack[-1].burst >= piece.burst or is_close(stack[-1].burst, piece.burst)):
            stack.pop()
        while len(stack) >= 2 and (_token_bucket_cross(stack[-2], piece)
                                   <= _token_bucket_cross(stack[-2], stack[-1]) * (1 + REL_TOL)):
            stack.pop()
        stack.append(piece)
    return tuple(stack)


def _canonical_rate_latencies(pieces: Iterable[RateLatency]) -> Tuple[RateLatency, ...]:
    ordered = sorted(pieces, key=lambda piece: (piece.rate, piece.latency))
    stack: List[RateLatency] = []
    for piece in ordered:
        if stack and is_close(piece.rate, stack[-1].rate):
            if piece.latency >= stack[-1].latency:
                continue
            stack.pop()
        # a slower server without a smaller latency never binds
        while stack and (stack[-1].latency >= piece.latency
                         or is_close(stack[-1].latency, piece.latency)):
            stack.pop()
        while len(stack) >= 2 and (_rate_latency_cross(stack[-2], piece)
                                   <= _rate_latency_cross(stack[-2], stack[-1]) * (1 + REL_TOL)):
            stack.pop()
        stack.append(piece)
    return tuple(stack)


class ConcaveCurve:
    """Arrival curve `alpha(t) = min_i (burst_i + rate_i * t)` for `t > 0`.

    The value at `t = 0` is the right limit `alpha(0+) = min_i burst_i`, which is the value
    deviation computations need. The pieces are stored by strictly decreasing rate and strictly
    increasing burst, with every piece binding on some interval.

    Args:
        pieces (Iterable[TokenBucket]): The token buckets, in any order and possibly redundant.
    """

    __slots__ = ("_pieces", "_breakpoints")

    def __init__(self, pieces: Iterable[TokenBucket]):
        pieces = tuple(pieces)
        if not pieces:
            raise DomainError("An arrival curve needs at least one token bucket.")
        self._pieces = _canonical_token_buckets(pieces)
        self._breakpoints = tuple(
            _token_bucket_cross(first, second)
            for first, second in zip(self._pieces[:-1], self._pieces[1:]))

    @classmethod
    def token_bucket(cls, rate: float, burst: float) -> "ConcaveCurve":
        """Single token-bucket arrival curve."""
        return cls([TokenBucket(rate=rate, burst=burst)])

    @classmethod
    def zero(cls) -> "ConcaveCurve":
        """The null arrival curve, neutral element of the addition."""
        return cls([TokenBucket(rate=0., burst=0.)])

    @property
    def pieces(self) -> Tuple[TokenBucket, ...]:
        return self._pieces

    @property
    def burst(self) -> float:
        """Right limit at zero, `alpha(0+)`."""
        return self._pieces[0].burst

    @property
    def rate(self) -> float:
        """Long-run arrival rate."""
        return self._pieces[-1].rate

    @property
    def is_zero(self) -> bool:
        return self.burst == 0. and self.rate == 0.

    def breakpoints(self) -> Tuple[float, ...]:
        """Abscissas where the binding token bucket changes (zero excluded)."""
        return self._breakpoints

    def __call__(self, t):
        t_array = _as_time_array(t)
        rates = np.array([piece.rate for piece in self._pieces])
        bursts = np.array([piece.burst for piece in self._pieces])
        values = np.min(bursts[:, None] + rates[:, None] * t_array.reshape(1, -1), axis=0)
        if t_array.ndim == 0:
            return float(values[0])
        return values.reshape(t_array.shape)

    def slope_at(self, t: float) -> float:
        """Right derivative at `t`."""
        return self._pieces[bisect.bisect_right(self._breakpoints, t)].rate

    def inverse(self, y: float) -> float:
        """Lower pseudo-inverse `inf {t >= 0 : alpha(t) >= y}` (infinite if never reached)."""
        t = 0.
        for piece in self._pieces:
            if y <= piece.burst:
                continue
            if piece.rate == 0.:
                return float("inf")
            t = max(t, (y - piece.burst) / piece.rate)
        return t

    def __eq__(self, other):
        if not isinstance(other, ConcaveCurve):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self):
        return hash(self._pieces)

    def __repr__(self):
        pieces = ", ".join(f"γ(r={piece.rate}, b={piece.burst})" for piece in self._pieces)
        return f"ConcaveCurve[{pieces}]"


class ConvexCurve:
    """Service curve `beta(t) = max_j rate_j * max(0, t - latency_j)`.

    The pieces are stored by strictly increasing rate and strictly increasing latency, with
    every piece binding on some interval.

    Args:
        pieces (Iterable[RateLatency]): The rate-latency curves, in any order and possibly
            redundant.
    """

    __slots__ = ("_pieces", "_breakpoints")

    def __init__(self, pieces: Iterable[RateLatency]):
        pieces = tuple(pieces)
        if not pieces:
            raise DomainError("A service curve needs at least one rate-latency curve.")
        self._pieces = _canonical_rate_latencies(pieces)
        self._breakpoints = (self._pieces[0].latency,) + tuple(
            _rate_latency_cross(first, second)
            for first, second in zip(self._pieces[:-1], self._pieces[1:]))

    @classmethod
    def rate_latency(cls, rate: float, latency: float) -> "ConvexCurve":
        """Single rate-latency service curve."""
        return cls([RateLatency(rate=rate, latency=latency)])

    @property
    def pieces(self) -> Tuple[RateLatency, ...]:
        return self._pieces

    @property
    def latency(self) -> float:
        """Time before any service is offered."""
        return self._pieces[0].latency

    @property
    def rate(self) -> float:
        """Long-run service rate."""
        return self._pieces[-1].rate

    def breakpoints(self) -> Tuple[float, ...]:
        """Abscissas where the slope changes: the first latency, then the piece crossings."""
        return self._breakpoints

    def __call__(self, t):
        t_array = _as_time_array(t)
        rates = np.array([piece.rate for piece in self._pieces])
        latencies = np.array([piece.latency for piece in self._pieces])
        flat = t_array.reshape(1, -1)
        values = np.max(rates[:, None] * np.maximum(0., flat - latencies[:, None]), axis=0)
        if t_array.ndim == 0:
            return float(values[0])
        return values.reshape(t_array.shape)

    def slope_at(self, t: float) -> float:
        """Right derivative at `t`."""
        index = bisect.bisect_right(self._breakpoints, t)
        return 0. if index == 0 else self._pieces[index - 1].rate

    def inverse(self, y: float) -> float:
        """Upper pseudo-inverse `min_j (latency_j + y / rate_j)` for `y >= 0`.

        At `y = 0` this is the first latency, i.e. the right limit of the inverse, so a burst
        of zero still waits for the server latency.
        """
        y = max(y, 0.)
        return min(piece.latency + y / piece.rate for piece in self._pieces)

    def __eq__(self, other):
        if not isinstance(other, ConvexCurve):
            return NotImplemented
        return self._pieces == other._pieces

    def __hash__(self):
        return hash(self._pieces)

    def __repr__(self):
        pieces = ", ".join(f"β(R={piece.rate}, T={piece.latency})" for piece in self._pieces)
        return f"ConvexCurve[{pieces}]"
