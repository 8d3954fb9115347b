from typing import Union

from tsnc.utils.tracker.base import Tracker


class DeltaTracker(Tracker):
    """A Tracker that remembers the previous value of a sequence and the change to the current one.

    Attributes:
        previous_value (float, optional): The value before the last update, `None` before the
            second update.
    """

    def __init__(self):
        super().__init__()
        self.previous_value = None

    def update(self, value_i: Union[int, float]) -> "Tracker":
        """Adds one value to the Tracker.

        Args:
            value_i (int or float): The numeric value to be added to the tracker.
        """
        self.previous_value = self.tracked_value if self.N > 0 else None
        self.tracked_value = value_i
        self.N += 1
        return self

    @property
    def delta(self) -> float:
        """Absolute change of the last update (infinite before the second update)."""
        if self.previous_value is None:
            return float("inf")
        return abs(self.tracked_value - self.previous_value)

    def is_stable(self, rel_tol: float = 0.) -> bool:
        """Whether the last update changed the value by at most `rel_tol` relative to it.

        With `rel_tol=0` only an exactly repeated value counts as stable.
        """
        if self.previous_value is None:
            return False
        if rel_tol == 0.:
            return self.tracked_value == self.previous_value
        return self.delta <= rel_tol * max(abs(self.tracked_value), abs(self.previous_value))
