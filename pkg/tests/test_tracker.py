"""Test for trackers."""
import pytest

from tsnc.utils.tracker import DeltaTracker, MultiValueTracker


def test_delta_tracker_before_second_update():
    tracker = DeltaTracker()
    assert tracker.previous_value is None
    assert tracker.delta == float("inf")
    assert not tracker.is_stable()
    tracker.update(1.)
    assert tracker.get() == 1.
    assert not tracker.is_stable(rel_tol=1.)


@pytest.mark.parametrize("values, rel_tol, stable", [
    ([1., 1.], 0., True),
    ([1., 1. + 1e-12], 0., False),
    ([1., 1. + 1e-12], 1e-9, True),
    ([1., 2.], 1e-9, False),
    ([0., 0.], 1e-9, True),
])
def test_delta_tracker_stability(values, rel_tol, stable):
    tracker = DeltaTracker()
    for value in values:
        tracker.update(value)
    assert tracker.is_stable(rel_tol) is stable
    assert tracker.delta == pytest.approx(abs(values[1] - values[0]))


def test_multi_value_tracker():
    tracker = MultiValueTracker()
    tracker.update({"s0": 1., "s1": 2.})
    assert not tracker.is_stable()
    tracker.update({"s0": 1., "s1": 3.})
    assert tracker.get() == {"s0": 1., "s1": 3.}
    assert tracker.changed_keys() == ["s1"]
    assert not tracker.is_stable()
    tracker.update({"s0": 1., "s1": 3.})
    assert tracker.is_stable()
    assert tracker.N == 3


def test_multi_value_tracker_new_key():
    tracker = MultiValueTracker()
    tracker.update({"s0": 1.})
    tracker.update({"s0": 1., "s1": 1.})
    assert tracker.changed_keys() == ["s1"]
