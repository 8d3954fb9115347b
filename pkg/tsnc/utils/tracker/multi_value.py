import copy
import typing

from tsnc.utils.tracker.base import Tracker
from tsnc.utils.tracker.delta import DeltaTracker


class MultiValueTracker(Tracker):
    """A Tracker for storing multiple values at once in the form of a dict mapping from keys to
    individual Trackers.

    Attributes:
        tracked_value (dict): The dictionary containing the individual trackers for each value.
    """

    def __init__(self, base_tracker: typing.Optional[DeltaTracker] = None):
        """
        Args:
            base_tracker (DeltaTracker, optional): The tracker object to be used for each new
                element to be tracked. Defaults to a fresh `DeltaTracker`.
        """
        super().__init__()
        self.tracked_value: typing.Dict[typing.Any, DeltaTracker] = {}
        self._base_tracker = DeltaTracker() if base_tracker is None else copy.deepcopy(base_tracker)

    def update(
            self,
            values: typing.Dict[typing.Any, typing.Union[int, float]]
    ) -> "Tracker":
        """Adds one value per tracked key.

        Note:
            Whenever the input dictionary contains a new key not stored in the Tracker, it will be
            added to its storage.

        Args:
            values (dict): A dictionary mapping from keys to numeric values.
        """
        for key, value in values.items():
            try:
                self.tracked_value[key].update(value)
            except KeyError:
                self.tracked_value[key] = copy.deepcopy(self._base_tracker)
                self.tracked_value[key].update(value)
        self.N += 1
        return self

    def __call__(self):
        """Returns the current tracked values."""
        return {key: tracker.get() for key, tracker in self.tracked_value.items()}

    def get(self) -> dict:
        """Returns the current tracked values."""
        return self()

    def changed_keys(self, rel_tol: float = 0.) -> typing.List[typing.Any]:
        """Keys whose last update was not stable under `rel_tol`."""
        return [key for key, tracker in self.tracked_value.items()
                if not tracker.is_stable(rel_tol)]

    def is_stable(self, rel_tol: float = 0.) -> bool:
        """Whether every tracked value is stable under `rel_tol`."""
        return self.N > 1 and not self.changed_keys(rel_tol)

    def __repr__(self):
        return f"MultiValueTracker: {self.get()}"
