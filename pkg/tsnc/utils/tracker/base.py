"""
This module contains the base Tracker of values that converge over the passes of an iteration.
"""
import abc


class Tracker(abc.ABC):
    """Base Tracker

    A tracker keeps the latest value of an iterated quantity and decides whether the iteration
    has settled.

    Warning: This class should not be used directly.
    Use derived classes instead.

    Attributes:
        tracked_value: The latest value.
        N (int): Number of updates so far.
    """

    @abc.abstractmethod
    def __init__(self):
        self.tracked_value = None
        self.N = 0

    @abc.abstractmethod
    def update(self, *args, **kwargs) -> "Tracker":
        """Records the value of the latest pass."""
        raise NotImplementedError

    @abc.abstractmethod
    def is_stable(self, rel_tol: float = 0.) -> bool:
        """Whether the latest update left the tracked value unchanged up to `rel_tol`."""
        raise NotImplementedError

    def __call__(self, *args, **kwargs):
        return self.tracked_value

    def get(self):
        """Returns the current tracked value."""
        return self()
